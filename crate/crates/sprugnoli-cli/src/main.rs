//! `sprugnoli` command: build, act with, multiply, invert, and analyze
//! generating-function-defined triangular arrays, plus the embedded
//! fixture registry behind `verify`.
//!
//! Exit codes: 0 success, 1 flag or expression error, 2 group-membership
//! violation, 3 internal mismatch (failed fixture, non-striped production,
//! broken recurrence).

use clap::{Args, Parser, Subcommand};
use sprugnoli::{extract_stripes, gf, production_matrix, recurrence_check, Error};
use sprugnoli_cli::element::{Element, ElementSpec, Family};
use sprugnoli_cli::output::{matrix_text, sequence_text, stripes_text, Format};
use sprugnoli_cli::{provenance_table, run_verify};
use std::process::exit;

#[derive(Parser)]
#[command(
    name = "sprugnoli",
    version,
    about = "exact arithmetic for Riordan, double Riordan, and Sprugnoli arrays"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ElementArgs {
    /// matrix family the series flags describe
    #[arg(long, value_enum)]
    family: Family,

    /// leading-column generating function, constant term nonzero
    #[arg(long)]
    g: Option<String>,

    /// column-step series for riordan (valuation 1) and stretched (valuation 2)
    #[arg(long)]
    f: Option<String>,

    /// first multiplier series (double, sprugnoli, general)
    #[arg(long)]
    f1: Option<String>,

    /// second multiplier series (double, sprugnoli, general)
    #[arg(long)]
    f2: Option<String>,

    /// third multiplier series (general, m >= 3)
    #[arg(long)]
    f3: Option<String>,

    /// fourth multiplier series (general, m = 4)
    #[arg(long)]
    f4: Option<String>,

    /// tuple order for the general family; defaults to the highest slot given
    #[arg(long)]
    m: Option<usize>,

    /// truncation order of every series
    #[arg(long, default_value_t = 12)]
    order: usize,

    /// matrix window size
    #[arg(long, default_value_t = 9)]
    dim: usize,

    /// output rendering
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Args)]
struct RhsArgs {
    /// right factor's --g
    #[arg(long)]
    rhs_g: Option<String>,

    /// right factor's --f
    #[arg(long)]
    rhs_f: Option<String>,

    /// right factor's --f1
    #[arg(long)]
    rhs_f1: Option<String>,

    /// right factor's --f2
    #[arg(long)]
    rhs_f2: Option<String>,

    /// right factor's --f3
    #[arg(long)]
    rhs_f3: Option<String>,

    /// right factor's --f4
    #[arg(long)]
    rhs_f4: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the dim x dim matrix of an element
    Build(ElementArgs),

    /// Print the first dim coefficients of the matrix acting on a series
    Apply {
        #[command(flatten)]
        el: ElementArgs,

        /// generating function of the column vector acted on
        #[arg(long)]
        seq: String,
    },

    /// Multiply by a second element of the same family, print the product matrix
    Mul {
        #[command(flatten)]
        el: ElementArgs,

        #[command(flatten)]
        rhs: RhsArgs,
    },

    /// Print the matrix of the group inverse
    Inv(ElementArgs),

    /// Print the production matrix P with M_{row+1} = M_row . P
    Production {
        #[command(flatten)]
        el: ElementArgs,

        /// print the Z column and period stripes instead of P itself
        #[arg(long)]
        stripes: bool,

        /// verify every row of the matrix against the stripe recurrences
        #[arg(long)]
        check: bool,
    },

    /// Run the embedded fixtures, optionally filtered by id substring
    Verify {
        /// substring selecting fixture ids
        filter: Option<String>,

        /// print the fixture provenance table instead of running
        #[arg(long)]
        list: bool,
    },
}

type CmdResult = Result<String, (String, i32)>;

fn input_code(e: &Error) -> i32 {
    match e {
        Error::Membership(_) => 2,
        _ => 1,
    }
}

fn run_code(e: &Error) -> i32 {
    match e {
        Error::Membership(_) => 2,
        Error::Parse { .. } | Error::Precision { .. } | Error::DimensionExceedsOrder { .. } => 1,
        _ => 3,
    }
}

fn input_err(e: Error) -> (String, i32) {
    (e.to_string(), input_code(&e))
}

fn run_err(e: Error) -> (String, i32) {
    (e.to_string(), run_code(&e))
}

/// `built` rows of the matrix get read; each needs a series coefficient.
fn check_window(dim: usize, order: usize, built: usize) -> Result<(), (String, i32)> {
    if dim == 0 {
        return Err(("--dim must be at least 1".into(), 1));
    }
    if built > order + 1 {
        return Err((format!("--dim {dim} needs --order at least {}", built - 1), 1));
    }
    Ok(())
}

fn make(args: &ElementArgs) -> Result<Element, (String, i32)> {
    let spec = ElementSpec {
        g: args.g.clone(),
        f: args.f.clone(),
        f1: args.f1.clone(),
        f2: args.f2.clone(),
        f3: args.f3.clone(),
        f4: args.f4.clone(),
        m: args.m,
    };
    Element::from_spec(args.family, &spec, args.order).map_err(input_err)
}

fn run(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Build(args) => {
            check_window(args.dim, args.order, args.dim)?;
            let el = make(&args)?;
            let m = el.build(args.dim).map_err(run_err)?;
            Ok(matrix_text(el.family().name(), args.dim, m.rows(), args.format))
        }
        Cmd::Apply { el: args, seq } => {
            check_window(args.dim, args.order, args.dim)?;
            let el = make(&args)?;
            let h = gf(&seq, args.order).map_err(input_err)?;
            let vals = el.apply(&h, args.dim).map_err(run_err)?;
            Ok(sequence_text(el.family().name(), &vals, args.format))
        }
        Cmd::Mul { el: args, rhs } => {
            check_window(args.dim, args.order, args.dim)?;
            let a = make(&args)?;
            let spec = ElementSpec {
                g: rhs.rhs_g,
                f: rhs.rhs_f,
                f1: rhs.rhs_f1,
                f2: rhs.rhs_f2,
                f3: rhs.rhs_f3,
                f4: rhs.rhs_f4,
                m: args.m,
            };
            let b = Element::from_spec(args.family, &spec, args.order).map_err(input_err)?;
            let m = a.mul_matrix(&b, args.dim).map_err(run_err)?;
            Ok(matrix_text(a.family().name(), args.dim, m.rows(), args.format))
        }
        Cmd::Inv(args) => {
            check_window(args.dim, args.order, args.dim)?;
            let el = make(&args)?;
            if let Element::General(t) = &el {
                if args.dim <= t.period() {
                    return Err((
                        format!(
                            "--dim {} cannot determine an order-{} inverse; use dim > {}",
                            args.dim,
                            t.period(),
                            t.period()
                        ),
                        1,
                    ));
                }
            }
            let m = el.inv_matrix(args.dim).map_err(run_err)?;
            Ok(matrix_text(el.family().name(), args.dim, m.rows(), args.format))
        }
        Cmd::Production { el: args, stripes, check } => {
            check_window(args.dim, args.order, args.dim + 1)?;
            let el = make(&args)?;
            let m = el.build(args.dim + 1).map_err(run_err)?;
            let p = production_matrix(&m).map_err(run_err)?;
            if stripes || check {
                let st = extract_stripes(&p, el.stripe_period()).map_err(run_err)?;
                if check {
                    recurrence_check(&m, &st).map_err(run_err)?;
                }
                if stripes {
                    return Ok(stripes_text(el.family().name(), p.dim(), &st, args.format));
                }
            }
            Ok(matrix_text(el.family().name(), p.dim(), p.rows(), args.format))
        }
        Cmd::Verify { .. } => unreachable!("verify is dispatched before run()"),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version leave through here with success
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            exit(code);
        }
    };
    if let Cmd::Verify { filter, list } = &cli.cmd {
        if *list {
            print!("{}", provenance_table());
            return;
        }
        let (report, ok) = run_verify(filter.as_deref());
        print!("{report}");
        exit(if ok { 0 } else { 3 });
    }
    match run(cli.cmd) {
        Ok(text) => print!("{text}"),
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            exit(code);
        }
    }
}
