use clap::Parser;

mod commands;

#[derive(Parser)]
#[command(
    name = "semischur",
    about = "Finite semigroups, their Cayley tables, and Schur ring enumeration",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: commands::Command,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(commands::run(cli.command));
}
