//! Complexes as graphs: construction, the file format, and the derived
//! structure (simplices, links, spans, metric).

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{io, Simplex, SimplicialComplex};

fn main() {
    // The flag complex on the octahedron graph: three antipodal pairs,
    // every other pair adjacent.
    let octa = generate(&GeneratorSpec::Octahedron).unwrap();
    println!("octahedron:");
    println!("  vertices:  {}", octa.n_vertices());
    println!("  edges:     {}", octa.n_edges());
    println!("  triangles: {}", octa.triangles().len());
    println!("  flag:      {}", octa.is_flag());
    println!("  diameter:  {:?}", octa.diameter());

    // Links and spans are induced subcomplexes. The link of any vertex here
    // is the equatorial square: a full 4-cycle, diagonals missing.
    let link = octa.link_vertex(0).unwrap();
    println!(
        "  link(0):   {:?} with edges {:?}",
        link.vertices(),
        link.edges()
    );
    let span = octa.span(&[2, 3, 4, 5]).unwrap();
    println!(
        "  span of the equator has {} induced edges",
        span.edges().len()
    );
    let edge_link = octa.link(&Simplex::edge(0, 2).unwrap()).unwrap();
    println!("  link(<0,2>): {:?}", edge_link.vertices());

    // Balls and spheres of the 1-skeleton metric.
    println!("  B_1(0): {:?}", octa.ball(0, 1).unwrap().vertices());
    println!("  S_2(0): {:?}", octa.sphere(0, 2).unwrap().vertices());

    // The text format round-trips; unreachable distances are values.
    let text = "# two components\ncomplex 5\ne 0 1\ne 1 2\ne 0 2\ne 3 4\n";
    let x: SimplicialComplex = io::parse_complex(text).unwrap();
    println!("\nparsed a {}-vertex complex from text:", x.n_vertices());
    println!("  connected: {}", x.is_connected());
    println!("  d(0, 4) =  {:?}  (None = unreachable)", x.distance(0, 4));
    println!("  canonical serialization:\n{}", io::write_complex(&x));
}
