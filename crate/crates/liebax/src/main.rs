fn main() {
    let (code, output) = liebax::cli::run(std::env::args());
    print!("{output}");
    std::process::exit(code);
}
