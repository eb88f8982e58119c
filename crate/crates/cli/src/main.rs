fn main() {
    std::process::exit(qcpaul_cli::run());
}
