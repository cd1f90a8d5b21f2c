//! `germ`: command-line front end to the exact germ engine.
//!
//! Exit codes: 0 on success or a true verdict, 1 on a false verdict or a
//! mathematical no-solution, 2 on input errors.

mod render;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use germ_core::blowup::{self, Chart, ResolutionNode, ResolveOptions};
use germ_core::centralizer::{ad_kernel, first_integral_kernel, generic_rank, same_span};
use germ_core::integrability::{self, LogOutcome, MeromorphicRatio};
use germ_core::table::{default_params, table_oracle, TableDimension, TableParams};
use germ_core::text::{self, ParseOptions, DEFAULT_TERM_CAP};
use germ_core::{
    lie_bracket, quasi_decompose_field, quasi_decompose_function, resonances, wedge, Error, GaussianRational,
    PolySeries, VectorFieldJet, Weight,
};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "germ", version, about = "Exact computations with germs of holomorphic vector fields")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Truncation degree N for jet computations.
    #[arg(long, global = true, default_value_t = 6)]
    max_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lie bracket [X, Y].
    Bracket { x: String, y: String },
    /// Coefficients of X1 ^ ... ^ Xm.
    Wedge {
        #[arg(required = true)]
        fields: Vec<String>,
    },
    /// Jet-level centralizer of X up to degree N.
    Centralizer { x: String },
    /// Jet-level polynomial first integrals of X up to degree N.
    FirstIntegrals { x: String },
    /// Generic rank: of the centralizer of a single field, or of the given fields.
    Rank {
        #[arg(required = true)]
        fields: Vec<String>,
    },
    /// Resonances of a spectrum up to total degree N.
    Resonances { spectrum: String },
    /// Classification of a plane singularity at the origin.
    Classify { x: String },
    /// One blow-up of a plane field at the origin.
    Blowup {
        x: String,
        /// Restrict the report to one chart.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        chart: Option<u8>,
    },
    /// Resolution tree of a plane singularity.
    Resolve {
        x: String,
        /// Maximal number of successive blow-ups.
        #[arg(long, default_value_t = blowup::DEFAULT_MAX_DEPTH)]
        depth: u32,
        /// Blow up purely radial and n.p.r.s. points too.
        #[arg(long)]
        force: bool,
    },
    /// Whether [X, Y] vanishes.
    CheckCommute { x: String, y: String },
    /// Whether F is a meromorphic first integral of X (or an integrating factor).
    VerifyIntegral {
        x: String,
        f: String,
        /// Check X(g) = div(X) g for the polynomial g instead.
        #[arg(long)]
        integrating_factor: bool,
    },
    /// Forms alpha, beta dual to a generically independent plane pair.
    DualPair { x1: String, x2: String },
    /// Logarithmic decomposition of omega / g over caller-supplied factors.
    LogDecomp(LogDecompArgs),
    /// Commuting pair from f(x + i y) for a series f in z.
    CrPair { f: String },
    /// Compare a row of the reference centralizer table with the computed kernel.
    Table(TableArgs),
    /// Quasi-homogeneous decomposition of a function or field.
    Decompose {
        input: String,
        /// Weights, e.g. `2,3`.
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u32>>,
    },
}

#[derive(Args, Debug)]
struct LogDecompArgs {
    /// One-form `P dx + Q dy`, optionally divided by a polynomial.
    omega: String,
    /// Denominator g (multiplies any denominator written in omega).
    g: Option<String>,
    /// Factor with multiplicity, `f:k` (repeatable).
    #[arg(long = "factor", required = true)]
    factors: Vec<String>,
    /// Largest degree of phi (default deg g).
    #[arg(long)]
    phi_degree: Option<u32>,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Row number, 1 to 8.
    row: u8,
    /// Eigenvalue ratio (row 2) or residue (row 8).
    #[arg(long)]
    lambda: Option<String>,
    /// p in rows 3 and 8.
    #[arg(long)]
    p: Option<u32>,
    /// q in row 3.
    #[arg(long)]
    q: Option<u32>,
    /// n in row 5.
    #[arg(long)]
    n: Option<u32>,
}

/// Outcome of a command.
struct Report {
    text: String,
    json: Value,
    /// `false` maps to exit code 1.
    verdict: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, verdict: true }
    }
}

/// Input error, mapped to exit code 2.
#[derive(Debug)]
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = std::result::Result<Report, InputError>;

struct Ctx {
    opts: ParseOptions,
    n: u32,
}

/// Number of top-level comma-separated components.
fn component_count(src: &str) -> usize {
    let mut depth = 0i32;
    let mut count = 1;
    for ch in src.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => count += 1,
            _ => {}
        }
    }
    count
}

impl Ctx {
    fn field(&self, src: &str) -> std::result::Result<VectorFieldJet, InputError> {
        let n = component_count(src);
        if !(1..=3).contains(&n) {
            return Err(InputError(format!("fields have 1 to 3 components, got {n}")));
        }
        Ok(text::parse_field_with(src, n, self.opts)?)
    }

    /// A field in the same dimension as an already parsed one.
    fn field_like(&self, src: &str, other: &VectorFieldJet) -> std::result::Result<VectorFieldJet, InputError> {
        Ok(text::parse_field_with(src, other.nvars(), self.opts)?)
    }

    /// Parses fields sharing the dimension of the first one.
    fn fields(&self, srcs: &[String]) -> std::result::Result<Vec<VectorFieldJet>, InputError> {
        let first = self.field(&srcs[0])?;
        let mut out = vec![first];
        for s in &srcs[1..] {
            out.push(self.field_like(s, &out[0])?);
        }
        Ok(out)
    }

    fn plane_field(&self, src: &str) -> std::result::Result<VectorFieldJet, InputError> {
        let x = self.field(src)?;
        if x.nvars() != 2 {
            return Err(InputError(format!("expected a plane field, got {} components", x.nvars())));
        }
        Ok(x)
    }

    fn poly(&self, src: &str, n: usize) -> std::result::Result<PolySeries, InputError> {
        Ok(text::parse_poly_with(src, n, self.opts)?)
    }
}

fn names(n: usize) -> Vec<&'static str> {
    text::default_names(n)
}

fn fmt_poly(f: &PolySeries) -> String {
    text::format_poly(f, &names(f.nvars()))
}

fn fmt_dims(d: &std::collections::BTreeMap<u32, usize>) -> String {
    d.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

fn envelope(command: &str, body: Value) -> Value {
    let mut doc = json!({ "version": SCHEMA_VERSION, "command": command });
    if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
        d.extend(b);
    }
    doc
}

fn cmd_bracket(ctx: &Ctx, x: &str, y: &str) -> Outcome {
    let x = ctx.field(x)?;
    let y = ctx.field_like(y, &x)?;
    let b = lie_bracket(&x, &y)?;
    Ok(Report::ok(format!("{b}\n"), envelope("bracket", json!({ "bracket": render::field(&b) }))))
}

fn cmd_wedge(ctx: &Ctx, fields: &[String]) -> Outcome {
    let xs = ctx.fields(fields)?;
    let w = wedge(&xs)?;
    let text = w.iter().map(fmt_poly).collect::<Vec<_>>().join(", ") + "\n";
    Ok(Report::ok(text, envelope("wedge", json!({ "coefficients": w.iter().map(render::poly).collect::<Vec<_>>() }))))
}

fn cmd_centralizer(ctx: &Ctx, x: &str) -> Outcome {
    let r = ad_kernel(&ctx.field(x)?, ctx.n)?;
    let mut t = String::new();
    writeln!(t, "field: {}", r.field).unwrap();
    writeln!(t, "max degree: {}", r.max_degree).unwrap();
    writeln!(t, "multiplicity: {}", r.multiplicity).unwrap();
    writeln!(t, "dims: {}", fmt_dims(&r.dims)).unwrap();
    writeln!(t, "certified dims: {}", fmt_dims(&r.certified_dims)).unwrap();
    writeln!(t, "certified dimension: {}", r.certified_dimension()).unwrap();
    writeln!(t, "basis:").unwrap();
    for k in &r.basis {
        match k.certification {
            germ_core::Certification::Exact => writeln!(t, "  [exact] {}", k.value).unwrap(),
            germ_core::Certification::Tentative { vanishes_through } => {
                writeln!(t, "  [tentative, bracket vanishes through degree {vanishes_through}] {}", k.value).unwrap()
            }
        }
    }
    writeln!(t, "rank: {}", r.rank_estimate).unwrap();
    writeln!(t, "stabilization: {}", r.stabilization.as_str()).unwrap();
    let doc = envelope(
        "centralizer",
        json!({
            "field": render::field(&r.field),
            "max_degree": r.max_degree,
            "multiplicity": r.multiplicity,
            "constraint_degree": r.constraint_degree,
            "dims": render::dims(&r.dims),
            "certified_dims": render::dims(&r.certified_dims),
            "certified_dimension": r.certified_dimension(),
            "basis": r.basis.iter().map(render::kernel_field).collect::<Vec<_>>(),
            "rank": r.rank_estimate,
            "stabilization": r.stabilization.as_str(),
        }),
    );
    Ok(Report::ok(t, doc))
}

fn cmd_first_integrals(ctx: &Ctx, x: &str) -> Outcome {
    let r = first_integral_kernel(&ctx.field(x)?, ctx.n)?;
    let mut t = String::new();
    writeln!(t, "field: {}", r.field).unwrap();
    writeln!(t, "max degree: {}", r.max_degree).unwrap();
    writeln!(t, "dims: {}", fmt_dims(&r.dims)).unwrap();
    writeln!(t, "certified dims: {}", fmt_dims(&r.certified_dims)).unwrap();
    writeln!(t, "certified integrals:").unwrap();
    for f in &r.basis {
        writeln!(t, "  {}", fmt_poly(f)).unwrap();
    }
    writeln!(t, "tentative integrals:").unwrap();
    for k in &r.tentative {
        let through = match k.certification {
            germ_core::Certification::Tentative { vanishes_through } => vanishes_through,
            germ_core::Certification::Exact => r.max_degree,
        };
        writeln!(t, "  {} (X(f) vanishes through degree {through})", fmt_poly(&k.value)).unwrap();
    }
    let doc = envelope(
        "first-integrals",
        json!({
            "field": render::field(&r.field),
            "max_degree": r.max_degree,
            "multiplicity": r.multiplicity,
            "constraint_degree": r.constraint_degree,
            "dims": render::dims(&r.dims),
            "certified_dims": render::dims(&r.certified_dims),
            "basis": r.basis.iter().map(render::poly).collect::<Vec<_>>(),
            "tentative": r.tentative.iter().map(render::kernel_function).collect::<Vec<_>>(),
        }),
    );
    Ok(Report::ok(t, doc))
}

fn cmd_rank(ctx: &Ctx, fields: &[String]) -> Outcome {
    let xs = ctx.fields(fields)?;
    let (rank, source) = if xs.len() == 1 {
        (ad_kernel(&xs[0], ctx.n)?.rank_estimate, "centralizer")
    } else {
        (generic_rank(&xs)?, "fields")
    };
    Ok(Report::ok(format!("rank: {rank}\n"), envelope("rank", json!({ "rank": rank, "of": source }))))
}

fn cmd_resonances(ctx: &Ctx, spectrum: &str) -> Outcome {
    let lambda = text::parse_scalar_list(spectrum)?;
    if lambda.is_empty() || lambda.len() > 3 {
        return Err(InputError(format!("spectra have 1 to 3 entries, got {}", lambda.len())));
    }
    let r = resonances(&lambda, ctx.n);
    let mut t = String::new();
    for e in &r.entries {
        let m = PolySeries::monomial(lambda.len(), e.exponents, GaussianRational::from(1));
        writeln!(t, "lambda_{} = <k, lambda> for k = {:?} ({} d/d{})", e.target + 1, e.exponents.exponents(lambda.len()), fmt_poly(&m), names(lambda.len())[e.target]).unwrap();
    }
    if r.is_empty() {
        t.push_str("no resonances\n");
    }
    let doc = envelope(
        "resonances",
        json!({
            "spectrum": lambda.iter().map(render::scalar).collect::<Vec<_>>(),
            "bound": ctx.n,
            "resonances": r.entries.iter().map(|e| json!([e.target, e.exponents.exponents(lambda.len())])).collect::<Vec<_>>(),
        }),
    );
    Ok(Report::ok(t, doc))
}

fn cmd_classify(ctx: &Ctx, x: &str) -> Outcome {
    let x = ctx.plane_field(x)?;
    let c = blowup::classify_singularity(&x)?;
    let mut t = String::new();
    writeln!(t, "class: {}", c.class.as_str()).unwrap();
    writeln!(t, "multiplicity: {}", c.nu).unwrap();
    writeln!(t, "isolated: {}", c.isolated).unwrap();
    writeln!(t, "linear part: {}", c.linear.case.as_str()).unwrap();
    writeln!(t, "trace: {}", c.linear.trace).unwrap();
    writeln!(t, "determinant: {}", c.linear.determinant).unwrap();
    writeln!(t, "eigenvalue ratio: {}", c.linear.ratio).unwrap();
    if let Some((a, b)) = &c.linear.eigenvalues {
        writeln!(t, "eigenvalues: {a}, {b}").unwrap();
    }
    let doc = envelope(
        "classify",
        json!({
            "field": render::field(&x),
            "class": c.class.as_str(),
            "multiplicity": c.nu,
            "isolated": c.isolated,
            "linear": render::linear(&c.linear),
        }),
    );
    Ok(Report::ok(t, doc))
}

fn cmd_blowup(ctx: &Ctx, x: &str, chart: Option<u8>) -> Outcome {
    let x = ctx.plane_field(x)?;
    let charts: Vec<Chart> = match chart {
        Some(i) => vec![Chart::from_index(i).expect("validated by clap")],
        None => vec![Chart::One, Chart::Two],
    };
    let test = blowup::dicritical_test(&x)?;
    let mut t = String::new();
    writeln!(t, "multiplicity: {}", test.nu).unwrap();
    writeln!(t, "witness: {}", test.witness).unwrap();
    writeln!(t, "dicritical: {}", test.dicritical).unwrap();
    let mut chart_docs = Vec::new();
    for c in &charts {
        let b = blowup::strict_transform(&x, *c)?;
        let cn = c.coordinate_names();
        let show = |v: &VectorFieldJet| {
            v.components().iter().map(|p| text::format_poly(p, &cn)).collect::<Vec<_>>().join(", ")
        };
        writeln!(t, "chart {} ({}, {}):", c.index(), cn[0], cn[1]).unwrap();
        writeln!(t, "  pullback: {}", show(&b.pullback)).unwrap();
        writeln!(t, "  divisor multiplicity: {} (expected {})", b.divisor_multiplicity, b.expected_multiplicity).unwrap();
        writeln!(t, "  strict transform: {}", show(&b.strict)).unwrap();
        chart_docs.push(json!({
            "chart": c.index(),
            "coordinates": cn,
            "pullback": render::field(&b.pullback),
            "divisor_multiplicity": b.divisor_multiplicity,
            "expected_multiplicity": b.expected_multiplicity,
            "multiplicity_matches": b.multiplicity_matches(),
            "strict": render::field(&b.strict),
        }));
    }
    let points: Vec<_> = blowup::divisor_singularities(&x)?
        .into_iter()
        .filter(|p| charts.contains(&p.chart))
        .collect();
    writeln!(t, "divisor singularities:").unwrap();
    for p in &points {
        let var = if p.chart == Chart::One { "t" } else { "s" };
        let mu = p.multiplicity.map(|m| format!(", multiplicity {m}")).unwrap_or_default();
        writeln!(t, "  chart {} {var} = {}: {}{mu}", p.chart.index(), p.coordinate, p.classification.as_str()).unwrap();
    }
    let doc = envelope(
        "blowup",
        json!({
            "field": render::field(&x),
            "multiplicity": test.nu,
            "dicritical": test.dicritical,
            "witness": render::unipoly(&test.witness),
            "charts": chart_docs,
            "singularities": points.iter().map(render::point).collect::<Vec<_>>(),
        }),
    );
    Ok(Report::ok(t, doc))
}

fn write_tree(t: &mut String, n: &ResolutionNode, indent: usize) {
    let pad = "  ".repeat(indent);
    let at = match n.history.last() {
        None => "origin".to_string(),
        Some(s) => {
            let var = if s.chart == Chart::One { "t" } else { "s" };
            format!("chart {} {var} = {}", s.chart.index(), s.coordinate)
        }
    };
    let mut line = format!("{pad}{at}: {} [{}]", n.classification.as_str(), n.status.as_str());
    if let Some(g) = &n.germ {
        write!(line, " germ {g}").unwrap();
    }
    if let Some(d) = n.next_blowup_dicritical {
        write!(line, " next blow-up dicritical: {d}").unwrap();
    }
    writeln!(t, "{line}").unwrap();
    for c in &n.children {
        write_tree(t, c, indent + 1);
    }
}

fn cmd_resolve(ctx: &Ctx, x: &str, depth: u32, force: bool) -> Outcome {
    let x = ctx.plane_field(x)?;
    let tree = blowup::resolve(&x, ResolveOptions { max_depth: depth, force_radial: force })?;
    let mut t = String::new();
    write_tree(&mut t, &tree, 0);
    writeln!(t, "blow-ups: {}", tree.blowup_count()).unwrap();
    writeln!(t, "height: {}", tree.height()).unwrap();
    writeln!(t, "resolved: {}", tree.is_resolved()).unwrap();
    let doc = envelope(
        "resolve",
        json!({
            "blowups": tree.blowup_count(),
            "height": tree.height(),
            "resolved": tree.is_resolved(),
            "tree": render::node(&tree),
        }),
    );
    Ok(Report { text: t, json: doc, verdict: tree.is_resolved() })
}

fn cmd_check_commute(ctx: &Ctx, x: &str, y: &str) -> Outcome {
    let x = ctx.field(x)?;
    let b = lie_bracket(&x, &ctx.field_like(y, &x)?)?;
    let commute = b.is_zero();
    let doc = envelope("check-commute", json!({ "commute": commute, "bracket": render::field(&b) }));
    let text = if commute { "true\n".to_string() } else { format!("false\nbracket: {b}\n") };
    Ok(Report { text, json: doc, verdict: commute })
}

fn cmd_verify_integral(ctx: &Ctx, x: &str, f: &str, integrating_factor: bool) -> Outcome {
    let x = ctx.field(x)?;
    let n = x.nvars();
    let (holds, kind) = if integrating_factor {
        let g = ctx.poly(f, n)?;
        (integrability::integrating_factor_check(&x, &g)?, "integrating_factor")
    } else {
        let (num, den) = text::parse_ratio_with(f, n, ctx.opts)?;
        let r = MeromorphicRatio::new(num, den)?;
        (integrability::meromorphic_first_integral_check(&x, &r)?, "first_integral")
    };
    let doc = envelope("verify-integral", json!({ "kind": kind, "holds": holds }));
    Ok(Report { text: format!("{holds}\n"), json: doc, verdict: holds })
}

fn cmd_dual_pair(ctx: &Ctx, x1: &str, x2: &str) -> Outcome {
    let (a, b) = (ctx.plane_field(x1)?, ctx.plane_field(x2)?);
    let d = integrability::dual_pair(&a, &b)?;
    let commute = lie_bracket(&a, &b)?.is_zero();
    let closed_a = integrability::closedness_check(&d.alpha, &d.denominator)?.closed;
    let closed_b = integrability::closedness_check(&d.beta, &d.denominator)?.closed;
    let g = fmt_poly(&d.denominator);
    let mut t = String::new();
    writeln!(t, "alpha: ({}) / ({g})", d.alpha).unwrap();
    writeln!(t, "beta: ({}) / ({g})", d.beta).unwrap();
    writeln!(t, "commute: {commute}").unwrap();
    writeln!(t, "closed: {}, {}", closed_a, closed_b).unwrap();
    let doc = envelope(
        "dual-pair",
        json!({
            "alpha": render::one_form(&d.alpha),
            "beta": render::one_form(&d.beta),
            "denominator": render::poly(&d.denominator),
            "commute": commute,
            "closed": [closed_a, closed_b],
        }),
    );
    Ok(Report::ok(t, doc))
}

fn cmd_log_decomp(ctx: &Ctx, a: &LogDecompArgs) -> Outcome {
    let (omega, den) = text::parse_one_form_with(&a.omega, 2, ctx.opts)?;
    let g = match &a.g {
        Some(s) => &ctx.poly(s, 2)? * &den,
        None => den,
    };
    let mut factors = Vec::new();
    for item in &a.factors {
        let (f, k) = match item.rsplit_once(':') {
            Some((f, k)) => {
                let k = k.trim().parse::<u32>().map_err(|_| InputError(format!("bad multiplicity in `{item}`")))?;
                (f, k)
            }
            None => (item.as_str(), 1),
        };
        factors.push((ctx.poly(f, 2)?, k));
    }
    match integrability::log_decomposition(&omega, &g, &factors, a.phi_degree)? {
        LogOutcome::Found(d) => {
            let mut t = String::new();
            for (f, (k, l)) in d.factors.iter().zip(d.multiplicities.iter().zip(&d.residues)) {
                writeln!(t, "residue along {} (multiplicity {k}): {l}", fmt_poly(f)).unwrap();
            }
            writeln!(t, "phi: {}", fmt_poly(&d.phi)).unwrap();
            let doc = envelope(
                "log-decomp",
                json!({
                    "solution": true,
                    "factors": d.factors.iter().map(render::poly).collect::<Vec<_>>(),
                    "multiplicities": d.multiplicities,
                    "residues": d.residues.iter().map(render::scalar).collect::<Vec<_>>(),
                    "phi": render::poly(&d.phi),
                    "unit": render::scalar(&d.unit),
                }),
            );
            Ok(Report::ok(t, doc))
        }
        LogOutcome::NoSolution { residual } => {
            let doc = envelope("log-decomp", json!({ "solution": false, "residual": render::one_form(&residual) }));
            Ok(Report { text: format!("no solution\nresidual: {residual}\n"), json: doc, verdict: false })
        }
    }
}

fn cmd_cr_pair(ctx: &Ctx, f: &str) -> Outcome {
    let f = ctx.poly(f, 1)?;
    let (x, y) = integrability::cr_pair(&f, ctx.n)?;
    let commute = lie_bracket(&x, &y)?.is_zero();
    let text = format!("X: {x}\nY: {y}\ncommute: {commute}\n");
    let doc = envelope("cr-pair", json!({ "x": render::field(&x), "y": render::field(&y), "commute": commute }));
    Ok(Report::ok(text, doc))
}

fn table_params(a: &TableArgs) -> std::result::Result<TableParams, InputError> {
    let lambda = a.lambda.as_deref().map(text::parse_scalar).transpose()?;
    Ok(match a.row {
        2 => lambda.map(TableParams::Lambda).unwrap_or_else(|| default_params(2)),
        3 => match (a.p, a.q) {
            (None, None) => default_params(3),
            (p, q) => TableParams::PQ(p.unwrap_or(1), q.unwrap_or(1)),
        },
        5 => a.n.map(TableParams::N).unwrap_or_else(|| default_params(5)),
        8 => TableParams::SaddleNode {
            p: a.p.unwrap_or(1),
            lambda: lambda.unwrap_or_else(|| GaussianRational::from(0)),
        },
        _ => TableParams::None,
    })
}

fn cmd_table(ctx: &Ctx, a: &TableArgs) -> Outcome {
    let params = table_params(a)?;
    let entry = table_oracle(a.row, &params, ctx.n)?;
    let r = ad_kernel(&entry.field, ctx.n)?;
    let certified = r.certified_basis();
    let agrees = same_span(&certified, &entry.generators);
    let rank = generic_rank(&certified)?;
    let printed_dimension = match entry.dimension {
        TableDimension::Finite(d) => json!(d),
        TableDimension::Infinite => json!("infinite"),
    };
    let mut t = String::new();
    writeln!(t, "row {}: {}", a.row, entry.field).unwrap();
    writeln!(t, "printed generators (through degree {}):", ctx.n).unwrap();
    for g in &entry.generators {
        writeln!(t, "  {g}").unwrap();
    }
    writeln!(t, "printed rank: {}, printed dimension: {}", entry.rank, printed_dimension.to_string().trim_matches('"')).unwrap();
    writeln!(t, "certified dimension: {}", certified.len()).unwrap();
    writeln!(t, "certified dims: {}", fmt_dims(&r.certified_dims)).unwrap();
    writeln!(t, "computed rank: {rank}").unwrap();
    writeln!(t, "spans agree: {agrees}").unwrap();
    let doc = envelope(
        "table",
        json!({
            "row": a.row,
            "field": render::field(&entry.field),
            "printed_generators": entry.generators.iter().map(render::field).collect::<Vec<_>>(),
            "printed_rank": entry.rank,
            "printed_dimension": printed_dimension,
            "certified_dimension": certified.len(),
            "certified_dims": render::dims(&r.certified_dims),
            "certified_basis": certified.iter().map(render::field).collect::<Vec<_>>(),
            "rank": rank,
            "agrees": agrees,
        }),
    );
    Ok(Report { text: t, json: doc, verdict: agrees && rank == entry.rank })
}

fn cmd_decompose(ctx: &Ctx, input: &str, weights: Option<Vec<u32>>) -> Outcome {
    let is_field = component_count(input) > 1;
    let weight = match weights {
        Some(w) => Weight::new(w)?,
        None => Weight::standard(if is_field { component_count(input) } else { 2 }),
    };
    let mut t = String::new();
    let mut parts = Vec::new();
    if is_field {
        let x = ctx.field(input)?;
        for (k, part) in quasi_decompose_field(&x, &weight)? {
            writeln!(t, "{k}: {part}").unwrap();
            parts.push(json!([k, render::field(&part)]));
        }
    } else {
        let f = ctx.poly(input, weight.len())?;
        for (k, part) in quasi_decompose_function(&f, &weight)? {
            writeln!(t, "{k}: {}", fmt_poly(&part)).unwrap();
            parts.push(json!([k, render::poly(&part)]));
        }
    }
    let doc = envelope("decompose", json!({ "weights": weight.entries(), "parts": parts }));
    Ok(Report::ok(t, doc))
}

fn run(cli: &Cli, ctx: &Ctx) -> Outcome {
    match &cli.command {
        Command::Bracket { x, y } => cmd_bracket(ctx, x, y),
        Command::Wedge { fields } => cmd_wedge(ctx, fields),
        Command::Centralizer { x } => cmd_centralizer(ctx, x),
        Command::FirstIntegrals { x } => cmd_first_integrals(ctx, x),
        Command::Rank { fields } => cmd_rank(ctx, fields),
        Command::Resonances { spectrum } => cmd_resonances(ctx, spectrum),
        Command::Classify { x } => cmd_classify(ctx, x),
        Command::Blowup { x, chart } => cmd_blowup(ctx, x, *chart),
        Command::Resolve { x, depth, force } => cmd_resolve(ctx, x, *depth, *force),
        Command::CheckCommute { x, y } => cmd_check_commute(ctx, x, y),
        Command::VerifyIntegral { x, f, integrating_factor } => cmd_verify_integral(ctx, x, f, *integrating_factor),
        Command::DualPair { x1, x2 } => cmd_dual_pair(ctx, x1, x2),
        Command::LogDecomp(a) => cmd_log_decomp(ctx, a),
        Command::CrPair { f } => cmd_cr_pair(ctx, f),
        Command::Table(a) => cmd_table(ctx, a),
        Command::Decompose { input, weights } => cmd_decompose(ctx, input, weights.clone()),
    }
}

fn term_cap() -> std::result::Result<usize, InputError> {
    match std::env::var("GERM_MAX_TERMS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|c| *c > 0)
            .ok_or_else(|| InputError(format!("GERM_MAX_TERMS must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_TERM_CAP),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = term_cap().and_then(|cap| run(&cli, &Ctx { opts: ParseOptions { term_cap: cap }, n: cli.max_degree }));
    match outcome {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
