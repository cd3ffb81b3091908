fn main() {
    std::process::exit(tiling_semistable::cli::run(std::env::args_os()));
}
