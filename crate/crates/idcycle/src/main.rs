fn main() {
    let code = idcycle::harness::run_cli(std::env::args(), &mut std::io::stdout());
    std::process::exit(code);
}
