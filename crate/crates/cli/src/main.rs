mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use input::{prime_power, rat_witt, split_fraction, ClassArg, Exprs};
use wittzeta::algebra::expr::{parse_in, parse_integer};
use wittzeta::algebra::{Integers, MultiPolyRing, PolyRing, Ring};
use wittzeta::lambda::{
    check_lambda_additivity, check_sigma_ring_hom, BinomialZ, PlethysticZu, SigmaStructure,
};
use wittzeta::measures::{
    closed_point_census, count_points, sym_product_counts, CountingMeasure, EulerMeasure, Measure,
    PoincareMeasure, Variety,
};
use wittzeta::witt::{rationalize, RatWitt, WittVec};
use wittzeta::zeta::{
    bundle_zeta_check, check_exponentiation, g_witt_identity_check, totaro_check,
    totaro_proof_trace, BundleKind,
};
use wittzeta::{Error, Result, Verdict};

#[derive(Parser)]
#[command(
    name = "wittzeta",
    version,
    about = "Big Witt vectors and Kapranov zeta functions"
)]
struct Cli {
    /// Truncation order N: series are computed modulo t^(N+1)
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
    prec: u32,
    /// Degree bound for rational reconstruction
    #[arg(long, global = true, default_value_t = 6)]
    dmax: usize,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for point counting
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Arithmetic in the big Witt ring
    #[command(subcommand)]
    Witt(WittCmd),
    /// Rational Witt vectors
    #[command(subcommand)]
    Rat(RatCmd),
    /// Zeta functions
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Identity checks
    #[command(subcommand)]
    Check(CheckCmd),
    /// Point counts over finite fields
    #[command(subcommand)]
    Count(CountCmd),
}

#[derive(Args)]
struct One {
    /// Series as a polynomial in t
    #[arg(long)]
    a: String,
    /// Use 1/a instead of a
    #[arg(long)]
    inv_a: bool,
}

#[derive(Args)]
struct Two {
    #[arg(long)]
    a: String,
    #[arg(long)]
    inv_a: bool,
    #[arg(long)]
    b: String,
    #[arg(long)]
    inv_b: bool,
}

#[derive(Subcommand)]
enum WittCmd {
    Add(Two),
    Mul(Two),
    Neg(One),
    /// The class [a] = 1/(1 - a t)
    Teichmuller {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    Ghost(One),
    /// g(t) -> 1/g(-t)
    Iota(One),
}

#[derive(Subcommand)]
enum RatCmd {
    /// Product of two fractions "(num)/(den)"
    Mul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    Rationalize(One),
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Counting,
    Euler,
    Poincare,
}

#[derive(Args)]
struct FieldArg {
    /// Field order, overriding the field of the variety
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Subcommand)]
enum ZetaCmd {
    /// Zeta function of a variety from its point counts
    Weil {
        #[arg(long)]
        variety: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        rationalize: bool,
    },
    /// Zeta function of a class under a measure
    Kapranov {
        #[arg(long, value_enum)]
        measure: MeasureArg,
        #[arg(long)]
        class: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        rationalize: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Fiber,
    Projective,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureArg {
    Binomial,
    Plethystic,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// zeta(X Y) = zeta(X) * zeta(Y)
    Expo {
        #[arg(long, value_enum)]
        measure: MeasureArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// zeta(X x A^n; t) = zeta(X; mu(L)^n t)
    Totaro {
        #[arg(long, value_enum)]
        measure: MeasureArg,
        #[arg(long)]
        variety: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
        /// Print every link of the Witt-ring derivation
        #[arg(long)]
        trace: bool,
    },
    /// Zeta of trivial affine or projective bundles
    Bundle {
        #[arg(long, value_enum)]
        measure: MeasureArg,
        #[arg(long)]
        variety: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        field: FieldArg,
    },
    /// g * (P/(1 - s t)) = g(s t) +_W (g * P)
    Gident {
        #[arg(long)]
        g: String,
        #[arg(long)]
        inv_g: bool,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        p: String,
    },
    /// lambda^0 = 1, lambda^1 = id and additivity of lambda_t
    LambdaAxioms {
        #[arg(long, value_enum)]
        structure: StructureArg,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Also check that sigma_t is a ring homomorphism
        #[arg(long)]
        ring_hom: bool,
    },
}

#[derive(Subcommand)]
enum CountCmd {
    /// Number of points over the degree-m extension
    Points {
        #[arg(long)]
        variety: String,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Closed points of degree 1..=prec
    Census {
        #[arg(long)]
        variety: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Points of the symmetric powers S^0..S^prec
    Sym {
        #[arg(long)]
        variety: String,
        #[command(flatten)]
        field: FieldArg,
    },
}

/// Rendered result and whether it counts as success.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            ok: true,
        }
    }
}

fn series_out<R: Ring>(g: &WittVec<R>) -> Outcome {
    let r = g.ring();
    let coeffs: Vec<String> = g.coeffs().iter().map(|c| r.render(c)).collect();
    Outcome::ok(
        g.render(),
        json!({ "precision": g.precision(), "coeffs": coeffs }),
    )
}

fn rat_out<R: Ring>(f: &RatWitt<R>) -> Outcome {
    let r = f.ring();
    let side = |p: &wittzeta::algebra::Poly<R::Elem>| -> Vec<String> {
        p.coeffs().iter().map(|c| r.render(c)).collect()
    };
    Outcome::ok(
        f.render(),
        json!({ "text": f.render(), "num": side(f.num()), "den": side(f.den()) }),
    )
}

fn rationalized<R: wittzeta::algebra::IntegralDomain + wittzeta::witt::RatReduce>(
    g: &WittVec<R>,
    dmax: usize,
) -> Result<Outcome> {
    Ok(match rationalize(g, dmax)? {
        Some(f) => rat_out(&f),
        None => {
            let text = format!("NOT FOUND (dmax {dmax}, precision {})", g.precision());
            Outcome {
                json: json!({ "text": text, "found": false }),
                text,
                ok: false,
            }
        }
    })
}

fn verdict_out(v: &Verdict) -> Outcome {
    Outcome {
        text: v.to_string(),
        json: json!({
            "verdict": v.to_string(),
            "holds": v.holds,
            "precision": v.precision,
            "failure": v.failure,
        }),
        ok: v.holds,
    }
}

fn list_out<T: ToString>(key: &str, items: &[T]) -> Outcome {
    let strs: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    Outcome::ok(strs.join(", "), json!({ key: strs }))
}

/// Runs `$body` with `$r` bound to the coefficient ring of `$ex`.
macro_rules! with_coeffs {
    ($ex:expr, |$r:ident| $body:expr) => {
        match $ex.coefficient_ring() {
            None => {
                let $r = Integers;
                $body
            }
            Some(m) => {
                let $r: MultiPolyRing = m;
                $body
            }
        }
    };
}

/// Runs `$body` with `$mu` bound to the chosen measure.
macro_rules! with_measure {
    ($kind:expr, $field:expr, |$mu:ident| $body:expr) => {
        match $kind {
            MeasureArg::Counting => {
                let (p, k) = $field.ok_or_else(|| {
                    Error::Parse("the counting measure needs --q or a variety with a field".into())
                })?;
                let $mu = CountingMeasure::new(p, k);
                $body
            }
            MeasureArg::Euler => {
                let $mu = EulerMeasure;
                $body
            }
            MeasureArg::Poincare => {
                let $mu = PoincareMeasure::default();
                $body
            }
        }
    };
}

fn field_of(q: Option<u64>, classes: &[&ClassArg]) -> Result<Option<(u64, u32)>> {
    match q {
        Some(q) => prime_power(q).map(Some),
        None => Ok(classes.iter().find_map(|c| c.field())),
    }
}

fn variety_arg(arg: &str, q: Option<u64>) -> Result<Variety> {
    let c = ClassArg::parse(arg)?;
    let (p, k) =
        field_of(q, &[&c])?.ok_or_else(|| Error::Parse("a named variety needs --q".into()))?;
    let mu = CountingMeasure::new(p, k);
    match c.resolve(&mu, Some((p, k)))?.as_variety() {
        Some(Some(v)) => Ok(v.clone()),
        Some(None) => Ok(Variety::point(p, k)),
        None => Err(Error::UnsupportedClass(format!("{arg} is not a variety"))),
    }
}

fn witt_cmd(cmd: &WittCmd, n: usize) -> Result<Outcome> {
    match cmd {
        WittCmd::Add(t) | WittCmd::Mul(t) => {
            let ex = Exprs::parse(&[&t.a, &t.b])?;
            with_coeffs!(ex, |r| {
                let a = ex.witt(&r, 0, t.inv_a, n)?;
                let b = ex.witt(&r, 1, t.inv_b, n)?;
                let out = if matches!(cmd, WittCmd::Add(_)) {
                    a.add(&b)?
                } else {
                    a.mul(&b)?
                };
                Ok(series_out(&out))
            })
        }
        WittCmd::Neg(o) | WittCmd::Ghost(o) | WittCmd::Iota(o) => {
            let ex = Exprs::parse(&[&o.a])?;
            with_coeffs!(ex, |r| {
                let a = ex.witt(&r, 0, o.inv_a, n)?;
                Ok(match cmd {
                    WittCmd::Neg(_) => series_out(&a.neg()),
                    WittCmd::Iota(_) => series_out(&a.lambda_involution()),
                    _ => {
                        let gh = a.ghost();
                        let vals: Vec<String> = gh.values().iter().map(|v| r.render(v)).collect();
                        Outcome::ok(vals.join(", "), json!({ "precision": n, "ghost": vals }))
                    }
                })
            })
        }
        WittCmd::Teichmuller { a } => {
            let ex = Exprs::parse(&[a])?;
            with_coeffs!(ex, |r| {
                let x = ex.scalar(&r, 0)?;
                Ok(series_out(&WittVec::teichmuller(r, &x, n)))
            })
        }
    }
}

fn rat_cmd(cmd: &RatCmd, n: usize, dmax: usize) -> Result<Outcome> {
    match cmd {
        RatCmd::Mul { a, b } => {
            let (an, ad) = split_fraction(a)?;
            let (bn, bd) = split_fraction(b)?;
            let ex = Exprs::parse(&[&an, &ad, &bn, &bd])?;
            with_coeffs!(ex, |r| {
                let f = rat_witt(&ex, &r, 0, 1)?;
                let g = rat_witt(&ex, &r, 2, 3)?;
                Ok(rat_out(&f.mul(&g)?))
            })
        }
        RatCmd::Rationalize(o) => {
            let ex = Exprs::parse(&[&o.a])?;
            with_coeffs!(ex, |r| rationalized(&ex.witt(&r, 0, o.inv_a, n)?, dmax))
        }
    }
}

fn zeta_cmd(cmd: &ZetaCmd, n: usize, dmax: usize) -> Result<Outcome> {
    match cmd {
        ZetaCmd::Weil {
            variety,
            field,
            rationalize,
        } => {
            let v = variety_arg(variety, field.q)?;
            let z = wittzeta::zeta::weil_zeta(&v, n)?;
            if *rationalize {
                rationalized(&z, dmax)
            } else {
                Ok(series_out(&z))
            }
        }
        ZetaCmd::Kapranov {
            measure,
            class,
            field,
            rationalize,
        } => {
            let c = ClassArg::parse(class)?;
            let fld = field_of(field.q, &[&c])?;
            with_measure!(measure, fld, |mu| {
                let z = mu.zeta_of(&c.resolve(&mu, fld)?, n)?;
                if *rationalize {
                    rationalized(&z, dmax)
                } else {
                    Ok(series_out(&z))
                }
            })
        }
    }
}

fn plethystic_arg(src: &str) -> Result<wittzeta::algebra::Poly<<Integers as Ring>::Elem>> {
    let ring = MultiPolyRing::new(vec!["u".into()]);
    let p = parse_in(src, &ring)?;
    let mut coeffs = vec![Integers.zero(); p.degree_in(0) as usize + 1];
    for (m, c) in p.terms() {
        coeffs[m[0] as usize] = c.clone();
    }
    Ok(PolyRing::new(Integers, "u").poly(coeffs))
}

fn lambda_check<S: SigmaStructure>(
    s: &S,
    a: &<S::R as Ring>::Elem,
    b: &<S::R as Ring>::Elem,
    n: usize,
    ring_hom: bool,
) -> Result<Verdict> {
    let mut vs = vec![check_lambda_additivity(s, a, b, n)];
    if ring_hom {
        vs.push(check_sigma_ring_hom(s, a, b, n)?);
    }
    Ok(Verdict::all(vs))
}

fn check_cmd(cmd: &CheckCmd, n: usize) -> Result<Outcome> {
    match cmd {
        CheckCmd::Expo {
            measure,
            x,
            y,
            field,
        } => {
            let (cx, cy) = (ClassArg::parse(x)?, ClassArg::parse(y)?);
            let fld = field_of(field.q, &[&cx, &cy])?;
            with_measure!(measure, fld, |mu| {
                let v =
                    check_exponentiation(&mu, &cx.resolve(&mu, fld)?, &cy.resolve(&mu, fld)?, n)?;
                Ok(verdict_out(&v))
            })
        }
        CheckCmd::Totaro {
            measure,
            variety,
            n: k,
            field,
            trace,
        } => {
            let c = ClassArg::parse(variety)?;
            let fld = field_of(field.q, &[&c])?;
            with_measure!(measure, fld, |mu| {
                let x = c.resolve(&mu, fld)?;
                let v = totaro_check(&mu, &x, *k, n)?;
                let mut out = verdict_out(&v);
                if *trace {
                    let tr = totaro_proof_trace(&mu, &x, *k, n)?;
                    out.text = format!("{tr}{}", out.text);
                    out.json["trace"] = serde_json::to_value(&tr).expect("serializable");
                    out.ok &= tr.holds();
                }
                Ok(out)
            })
        }
        CheckCmd::Bundle {
            measure,
            variety,
            n: k,
            kind,
            field,
        } => {
            let c = ClassArg::parse(variety)?;
            let fld = field_of(field.q, &[&c])?;
            let kind = match kind {
                KindArg::Fiber => BundleKind::Fiber,
                KindArg::Projective => BundleKind::Projective,
            };
            with_measure!(measure, fld, |mu| {
                Ok(verdict_out(&bundle_zeta_check(
                    &mu,
                    &c.resolve(&mu, fld)?,
                    *k,
                    n,
                    kind,
                )?))
            })
        }
        CheckCmd::Gident { g, inv_g, s, p } => {
            let ex = Exprs::parse(&[g, s, p])?;
            with_coeffs!(ex, |r| {
                let gw = ex.witt(&r, 0, *inv_g, n)?;
                let sv = ex.scalar(&r, 1)?;
                Ok(verdict_out(&g_witt_identity_check(
                    &gw,
                    &sv,
                    &ex.poly(&r, 2),
                    n,
                )?))
            })
        }
        CheckCmd::LambdaAxioms {
            structure,
            a,
            b,
            ring_hom,
        } => {
            let v = match structure {
                StructureArg::Binomial => lambda_check(
                    &BinomialZ,
                    &parse_integer(a)?,
                    &parse_integer(b)?,
                    n,
                    *ring_hom,
                )?,
                StructureArg::Plethystic => lambda_check(
                    &PlethysticZu::default(),
                    &plethystic_arg(a)?,
                    &plethystic_arg(b)?,
                    n,
                    *ring_hom,
                )?,
            };
            Ok(verdict_out(&v))
        }
    }
}

fn count_cmd(cmd: &CountCmd, n: usize) -> Result<Outcome> {
    match cmd {
        CountCmd::Points { variety, m, field } => {
            let v = variety_arg(variety, field.q)?;
            let c = count_points(&v, *m)?;
            Ok(Outcome::ok(
                c.to_string(),
                json!({ "count": c.to_string() }),
            ))
        }
        CountCmd::Census { variety, field } => Ok(list_out(
            "census",
            &closed_point_census(&variety_arg(variety, field.q)?, n)?,
        )),
        CountCmd::Sym { variety, field } => Ok(list_out(
            "sym",
            &sym_product_counts(&variety_arg(variety, field.q)?, n)?,
        )),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let n = cli.prec as usize;
    match &cli.cmd {
        Cmd::Witt(c) => witt_cmd(c, n),
        Cmd::Rat(c) => rat_cmd(c, n, cli.dmax),
        Cmd::Zeta(c) => zeta_cmd(c, n, cli.dmax),
        Cmd::Check(c) => check_cmd(c, n),
        Cmd::Count(c) => count_cmd(c, n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
