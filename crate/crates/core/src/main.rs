fn main() {
    // `run` reports panics itself
    std::panic::set_hook(Box::new(|_| {}));
    let code = lexorder::cli::run(
        std::env::args(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
