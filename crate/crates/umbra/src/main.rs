fn main() { std::process::exit(umbra::cli::main_entry()) }
