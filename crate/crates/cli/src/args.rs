use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ellded", version, about = "Elliptic Apostol-Dedekind sums and their reciprocity laws")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Tolerance override in (0, 1e-3]
    #[arg(long, global = true, env = "ELLDED_TOL", value_parser = parse_tol)]
    pub tol: Option<f64>,

    /// Seed for pseudorandom sampling
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Cap on the number of terms of any single series
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if v > 0.0 && v <= 1e-3 {
        Ok(v)
    } else {
        Err(format!("tolerance must lie in (0, 1e-3], got {v}"))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bernoulli number B_k, or B_k(x) / the periodic B̄_k(x) when --x is given
    Bernoulli {
        #[arg(short)]
        k: u32,
        /// Rational argument such as 1/3
        #[arg(long)]
        x: Option<String>,
        #[arg(long, requires = "x")]
        periodic: bool,
    },
    /// Apostol's generalized Dedekind sum s_k(q, p)
    ApostolSum {
        #[arg(short)]
        k: u32,
        #[arg(short, allow_negative_numbers = true)]
        q: i64,
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
    },
    /// The Laurent polynomial g_w(p, q)
    GPoly {
        #[arg(short)]
        w: u32,
    },
    /// Eisenstein series E_{2n}(τ)
    Eisenstein {
        #[arg(short)]
        n: u32,
        #[arg(long)]
        tau: String,
        /// Use the normalization with constant term -B_{2n}/(4n)
        #[arg(long)]
        normalized: bool,
    },
    /// Elliptic Bernoulli function B_k(x, y; τ)
    EllipticBernoulli {
        #[arg(short)]
        k: u32,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long)]
        tau: String,
    },
    /// Weierstrass ζ(z; τ) or its k-th derivative
    ZetaW {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        tau: String,
        #[arg(short, default_value_t = 0)]
        k: u32,
    },
    /// Elliptic Apostol-Dedekind sum D⁻_{2n}(p, q; τ)
    EllipticSum {
        #[arg(short)]
        n: u32,
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short, allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        tau: String,
        /// zeta_derivative or bernoulli_product
        #[arg(long, default_value = "zeta_derivative")]
        route: String,
    },
    /// Reciprocity function R⁻_{2n}(p, q; τ)
    ReciprocityRhs {
        #[arg(short)]
        n: u32,
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short, allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        tau: String,
    },
    /// Generating functions D⁻(p,q;x), D⁻(q,p;x), R⁻(p,q;x) and their residual
    Generating {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short, allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        tau: String,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Machide's elliptic Dedekind-Rademacher sum S_{m,n}
    Machide {
        /// Pair "a',a"
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        /// Pair "x',x"
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(long)]
        tau: String,
    },
    /// Period data of the Eisenstein series of weight 2n+2
    PeriodData {
        #[arg(short)]
        n: u32,
    },
    /// Run a verification family; exits 1 if any check fails
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// apostol-reciprocity, thm11, thm13, prop31, lemma32, eq73, three-term,
    /// eq64, basis-rank, limit or kronecker
    pub check: String,
    #[arg(short)]
    pub n: Option<u32>,
    #[arg(short, allow_negative_numbers = true)]
    pub p: Option<i64>,
    #[arg(short, allow_negative_numbers = true)]
    pub q: Option<i64>,
    #[arg(short)]
    pub w: Option<u32>,
    #[arg(short)]
    pub k: Option<u32>,
    #[arg(long)]
    pub tau: Option<String>,
    #[arg(long)]
    pub w_max: Option<u32>,
    #[arg(long)]
    pub pq_max: Option<i64>,
    #[arg(long)]
    pub num_tau: Option<usize>,
}
