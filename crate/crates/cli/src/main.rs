use bent_ice_cli::{run_args, EXIT_USAGE};
use clap::error::ErrorKind;

fn main() {
    match run_args(std::env::args_os()) {
        Ok(out) => {
            println!("{}", out.stdout());
            std::process::exit(out.exit_code);
        }
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    }
}
