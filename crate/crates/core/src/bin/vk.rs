fn main() {
    std::process::exit(vkernel::frontend::cli::main());
}
