fn main() {
    std::process::exit(lcs_apg::cli::main());
}
