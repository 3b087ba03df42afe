use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use faddeeva::oracle::{OracleConfig, ReferenceMethod, SalzerParams};
use faddeeva_cli::{
    bench, error_map, eval_point, format_value, write_error_csv, BenchDomain, GridSpec,
    HarnessError, MethodUnderTest,
};

#[derive(Parser)]
#[command(
    name = "faddeeva",
    about = "Faddeeva function w(z): point evaluation, error maps, benchmarks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at a single point
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        /// w | dawson | erf | voigt_k | voigt_l | z | fresnel | phi
        #[arg(long, default_value = "w")]
        func: String,
    },
    /// Error map of a method against a reference over a grid, to CSV
    Grid {
        #[arg(long, allow_negative_numbers = true)]
        xmin: f64,
        #[arg(long, allow_negative_numbers = true)]
        xmax: f64,
        #[arg(long, allow_negative_numbers = true)]
        ymin: f64,
        #[arg(long, allow_negative_numbers = true)]
        ymax: f64,
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Reference selection; defaults to quadrature inside |z| = 8 and
        /// the deep continued fraction outside
        #[arg(long, value_enum)]
        compare: Option<CompareArg>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Timed dispatch over a seeded random batch
    Bench {
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum)]
        domain: DomainArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Dispatch,
    Rational,
    #[value(name = "small_y")]
    SmallY,
    #[value(name = "laplace_cf")]
    LaplaceCf,
    Salzer,
    Chiarella,
}

impl From<MethodArg> for MethodUnderTest {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Dispatch => MethodUnderTest::Dispatch,
            MethodArg::Rational => MethodUnderTest::Rational,
            MethodArg::SmallY => MethodUnderTest::SmallY,
            MethodArg::LaplaceCf => MethodUnderTest::LaplaceCf,
            MethodArg::Salzer => MethodUnderTest::Salzer(SalzerParams::default()),
            MethodArg::Chiarella => MethodUnderTest::Chiarella { step: 0.4 },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CompareArg {
    Quadrature,
    Salzer,
    #[value(name = "cf_deep")]
    CfDeep,
}

impl From<CompareArg> for ReferenceMethod {
    fn from(c: CompareArg) -> Self {
        match c {
            CompareArg::Quadrature => ReferenceMethod::Quadrature,
            CompareArg::Salzer => ReferenceMethod::Salzer,
            CompareArg::CfDeep => ReferenceMethod::ContinuedFractionDeep,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Band,
    Box15,
    Box10k,
}

impl From<DomainArg> for BenchDomain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Band => BenchDomain::Band,
            DomainArg::Box15 => BenchDomain::Box15,
            DomainArg::Box10k => BenchDomain::Box10k,
        }
    }
}

fn run(cli: Cli) -> Result<(), HarnessError> {
    match cli.command {
        Command::Eval { x, y, func } => {
            let v = eval_point(x, y, &func)?;
            println!("{}", format_value(v));
            Ok(())
        }
        Command::Grid {
            xmin,
            xmax,
            ymin,
            ymax,
            nx,
            ny,
            method,
            compare,
            out,
        } => {
            let spec = GridSpec {
                x_min: xmin,
                x_max: xmax,
                y_min: ymin,
                y_max: ymax,
                nx,
                ny,
            };
            let reference = OracleConfig {
                method: compare.map(Into::into).unwrap_or_default(),
                ..OracleConfig::default()
            };
            let grid = error_map(&spec, &method.into(), &reference)?;
            println!("{}", grid.summary());
            let file = File::create(&out)?;
            write_error_csv(&grid, BufWriter::new(file))?;
            Ok(())
        }
        Command::Bench {
            count,
            domain,
            seed,
        } => {
            let report = bench(count, domain.into(), seed);
            print!("{report}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
