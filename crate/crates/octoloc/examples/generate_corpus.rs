//! The generator families and the fixture corpus with its frozen
//! expectations.

use octoloc::generators::{corpus, generate, GeneratorSpec, Profile};
use octoloc::io;

fn main() {
    // Specs parse from a compact syntax and compose.
    for text in [
        "wheel(6)",
        "hyperbolic_disk(2)",
        "cone_over(cycle(8))",
        "join(path(2),discrete(2))",
        "random_flag(10,0.4,7)",
    ] {
        let spec: GeneratorSpec = text.parse().unwrap();
        let x = generate(&spec).unwrap();
        println!(
            "{spec}: {} vertices, {} edges, flag = {}",
            x.n_vertices(),
            x.n_edges(),
            x.is_flag()
        );
    }

    // The smoke corpus pairs each instance with oracle-derived verdicts.
    println!("\nsmoke corpus:");
    for entry in corpus(Profile::Smoke) {
        println!(
            "  {:30} located8 = {:?}, shortest full cycle = {:?}",
            entry.spec.to_string(),
            entry.expect.located8,
            entry.expect.shortest_full_cycle
        );
    }
    println!(
        "full corpus: {} instances with frozen expectations",
        corpus(Profile::Full).len()
    );

    // Any instance serializes to the complex file format.
    let text = io::write_complex(&generate(&"cycle(4)".parse().unwrap()).unwrap());
    println!("\ncycle(4) in the file format:\n{text}");
}
