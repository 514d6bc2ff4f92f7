fn main() {
    std::process::exit(graph_ricci::cli::run(std::env::args_os()));
}
