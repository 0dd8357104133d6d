use clap::Parser;
use rootcorr::cli::{self, Cli, RunConfig, EXIT_INVALID_CONFIG};

fn main() {
    let args = Cli::parse();
    let cfg = match RunConfig::from_cli(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_INVALID_CONFIG as i32);
        }
    };
    if args.dump_config {
        print!("{}", cfg.to_toml());
        return;
    }
    match cli::run(&cfg) {
        Ok((exit, text)) => {
            if cfg.output.path.is_none() {
                print!("{text}");
            }
            std::process::exit(exit as i32);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_INVALID_CONFIG as i32);
        }
    }
}
