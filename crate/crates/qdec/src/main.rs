use clap::Parser;

fn main() {
    let cli = qdec::cli::Cli::parse();
    if let Err(e) = qdec::cli::run(cli) {
        eprintln!("error: {e}");
        // invalid flag combinations are usage errors like clap's own
        let code = if matches!(e, qdec::Error::Gray1RequiresQ1) {
            2
        } else {
            1
        };
        std::process::exit(code);
    }
}
