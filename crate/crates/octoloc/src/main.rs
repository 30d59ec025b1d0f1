fn main() {
    std::process::exit(octoloc::cli::main_entry());
}
