fn main() {
    let out = quinv::run_from_args(std::env::args());
    print!("{}", out.stdout);
    std::process::exit(out.exit);
}
