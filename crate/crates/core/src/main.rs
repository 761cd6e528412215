fn main() {
    std::process::exit(flagcalc::cli::main_exit_code());
}
