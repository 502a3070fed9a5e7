fn main() {
    std::process::exit(gluckkit::cli::dispatch(std::env::args_os()));
}
