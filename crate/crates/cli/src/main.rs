use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use minkring_cli::{run, CliError, Command, Format, RingSelector, TileForm, Verb};

/// Exact queries in Minkowski rings of lattice polytope families.
#[derive(Parser, Debug)]
#[command(name = "minkring", version)]
struct Args {
    verb: Verb,

    /// Polynomial; read line by line from standard input when omitted or `-`.
    #[arg(allow_hyphen_values = true)]
    payload: Option<String>,

    /// coxeter | point | interval:a,b[:poly|laurent][:full] | box:d[:signed] |
    /// product:<left>,<right> | principal:<shape>[:poly|laurent]
    #[arg(long, default_value = "coxeter")]
    ring: RingSelector,

    /// triangle, square, interval, or a polytope literal such as `box[0..1,0..1]`.
    #[arg(long)]
    polytope: Option<String>,

    /// Faces such as `edge:OA,vertex:B`.
    #[arg(long)]
    cover: Option<String>,

    /// Tile `z^n` instead of a polynomial.
    #[arg(long)]
    zn: Option<u32>,

    #[arg(long, value_enum, default_value_t)]
    form: TileForm,

    #[arg(long, value_enum, default_value_t)]
    format: Format,

    /// Also write the reports to this file.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn commands(args: &Args) -> io::Result<Vec<Command>> {
    let mut base = Command::new(args.verb, args.ring.clone());
    base.polytope = args.polytope.clone();
    base.cover = args.cover.clone();
    base.zn = args.zn;
    base.tile_form = args.form;
    let from_stdin = match args.payload.as_deref() {
        Some("-") => true,
        Some(_) => false,
        None => base.wants_polynomial(),
    };
    if !from_stdin {
        base.payload = args.payload.clone();
        return Ok(vec![base]);
    }
    let mut out = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(base.clone().payload(line.trim()));
        }
    }
    Ok(out)
}

fn execute(args: &Args) -> Result<String, CliError> {
    let cmds = commands(args).map_err(|e| CliError::Unsupported(e.to_string()))?;
    let mut rendered = Vec::new();
    for cmd in &cmds {
        rendered.push(run(cmd)?.render(args.format));
    }
    Ok(rendered.join("\n"))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(text) => {
            if let Some(path) = &args.output {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::FAILURE;
                }
            }
            print!("{text}");
            io::stdout().flush().ok();
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
