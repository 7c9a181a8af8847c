fn main() {
    std::process::exit(tri_dm::main_with_args(std::env::args_os()));
}
