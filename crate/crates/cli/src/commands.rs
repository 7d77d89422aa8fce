use std::fmt::Write as _;
use std::fs;

use serde_json::{json, Value};
use thiserror::Error;

use chernpos::algebra::Family;
use chernpos::expansion::{BasisLabel, Expansion};
use chernpos::partition::{enumerate_partitions, enumerate_ssyt, Partition};
use chernpos::positivity::{
    certify, schur_bundle_class, verify_classical, verify_lagrangian, verify_legendrian, PositivityReport, Verdict,
};
use chernpos::schur::{
    lr_cross_check, lr_multiply, lr_oracle, schur_jt, split_difference, super_split, to_schur, BundleSymbol,
    DEFAULT_ORACLE_BOUND,
};
use chernpos::{
    lagrangian_part, legendrian_parse, legendrian_positivity, parse, qtilde, CPolynomial, GrassmannianRing,
    LagrangianRing,
};

use crate::output::Output;
use crate::{Command, Context, GrOp, LgOp, TableArg};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] chernpos::Error),
    #[error("{0}")]
    Input(String),
}

impl From<chernpos::ParseError> for CliError {
    fn from(e: chernpos::ParseError) -> Self {
        CliError::Engine(e.into())
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// The expression text, from the positional argument or `--input`.
fn expression(arg: &Option<String>, ctx: &Context) -> Result<String> {
    match (arg, &ctx.input) {
        (Some(_), Some(_)) => Err(CliError::Input("give an expression or --input, not both".into())),
        (Some(e), None) => Ok(e.clone()),
        (None, Some(path)) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display()))),
        (None, None) => Err(CliError::Input("missing expression (argument or --input FILE)".into())),
    }
}

fn polynomial(arg: &Option<String>, ctx: &Context) -> Result<(String, CPolynomial)> {
    let text = expression(arg, ctx)?;
    let p = parse(&text)?.to_polynomial();
    Ok((text, p))
}

fn lines<K: BasisLabel>(x: &Expansion<K>) -> String {
    if x.is_zero() {
        return "  0\n".into();
    }
    x.iter().map(|(k, c)| format!("  {k}: {c}\n")).collect()
}

fn report_text<K: BasisLabel>(r: &PositivityReport<K>) -> String {
    let mut t = format!("{}: {}\n", r.name, r.verdict.as_str());
    t += &lines(&r.expansion);
    for (k, c) in &r.witnesses {
        let _ = writeln!(t, "  negative: {k}: {c}");
    }
    for (k, v) in &r.details {
        if !v.is_array() {
            let _ = writeln!(t, "  {k}: {v}");
        }
    }
    t
}

fn report_failed<K: BasisLabel>(r: &PositivityReport<K>) -> bool {
    r.verdict != Verdict::Positive || !r.checks_pass()
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn run(cmd: &Command, ctx: &Context) -> Result<Output> {
    Ok(match cmd {
        Command::Expand { expr } => {
            let text = expression(expr, ctx)?;
            let ast = parse(&text)?;
            let p = ast.to_polynomial();
            let degree = p.homogeneous_degree().ok().flatten();
            Output::new(
                json!({"input": text, "canonical": ast.to_string(), "polynomial": p.to_string(), "degree": degree}),
                format!("{}\n= {p}\n", ast),
            )
        }
        Command::ToSchur { expr, length_bound } => {
            let (text, p) = polynomial(expr, ctx)?;
            let x = to_schur(&p, *length_bound)?;
            Output::new(json!({"input": text, "degree": x.degree(), "expansion": x.to_json()}), lines(&x))
        }
        Command::Certify { expr, length_bound } => {
            let (text, p) = polynomial(expr, ctx)?;
            let mut r = certify(&p, *length_bound)?;
            r.input = text;
            let negative = r.verdict == Verdict::NotNonnegative;
            Output::new(r.to_json(), report_text(&r)).failing_if(negative)
        }
        Command::Lr { lambda, mu, oracle } => {
            let x = lr_multiply(lambda, mu);
            let mut j = json!({"lambda": partition_json(lambda), "mu": partition_json(mu), "product": x.to_json()});
            let mut t = format!("s{lambda} * s{mu}\n{}", lines(&x));
            let mut agrees = true;
            if *oracle {
                let bound = DEFAULT_ORACLE_BOUND.max(lambda.weight() + mu.weight());
                let o = lr_oracle(lambda, mu, bound)?;
                agrees = o == x;
                j["oracle"] = o.to_json();
                j["oracle_agrees"] = json!(agrees);
                let _ = writeln!(t, "oracle agrees: {agrees}");
            }
            Output::new(j, t).failing_if(!agrees)
        }
        Command::LrCheck { bound } => {
            let (pairs, bad) = lr_cross_check(*bound, ctx.mode);
            let mismatches: Vec<Value> = bad
                .iter()
                .map(|m| {
                    json!({
                        "lambda": partition_json(&m.lambda),
                        "mu": partition_json(&m.mu),
                        "product": m.product.to_json(),
                        "oracle": m.oracle.as_ref().map(|o| o.to_json()),
                    })
                })
                .collect();
            let t = format!("{pairs} pairs with |λ|+|μ| ≤ {bound}, {} mismatches\n", bad.len());
            Output::new(json!({"bound": bound, "pairs": pairs, "mismatches": mismatches}), t).failing_if(!bad.is_empty())
        }
        Command::Qtilde { mu } => {
            let p = qtilde(mu.as_partition());
            Output::new(json!({"mu": mu.parts(), "polynomial": p.to_string()}), format!("Q̃{mu} = {p}\n"))
        }
        Command::Supersymmetric { lambda, rank_e, rank_f } => {
            let e = BundleSymbol::new(Family::C, *rank_e);
            let f = BundleSymbol::new(Family::CPrime, *rank_f);
            let p = f.specialize(&e.specialize(&schur_jt(lambda, &e, &f)?));
            let in_hook = match (rank_e, rank_f) {
                (Some(n), Some(m)) => Some(lambda.in_hook(*n as usize, *m)),
                _ => None,
            };
            Output::new(
                json!({
                    "lambda": partition_json(lambda),
                    "rank_e": rank_e,
                    "rank_f": rank_f,
                    "polynomial": p.to_string(),
                    "vanishes": p.is_zero(),
                    "in_hook": in_hook,
                }),
                format!("s{lambda}(E - F) = {p}\n"),
            )
        }
        Command::SuperSplit { lambda, expr, rank_e, rank_f } => {
            let x = match (lambda, expr) {
                (Some(l), _) => super_split(l, *rank_e, *rank_f)?,
                (None, e) => split_difference(&polynomial(e, ctx)?.1, *rank_e, *rank_f)?,
            };
            let pure: Vec<Value> = x
                .pure_e_slice()
                .iter()
                .map(|(a, c)| json!({"partition": a.parts(), "coeff": c.to_string()}))
                .collect();
            let mut t = String::new();
            for ((a, b), c) in x.iter() {
                let _ = writeln!(t, "  s{a}(E) s{b}(F*): {c}");
            }
            Output::new(json!({"terms": x.to_json(), "pure_e_slice": pure}), t)
        }
        Command::Gr { r, n, op } => gr(GrassmannianRing::new(*r, *n)?, op, ctx)?,
        Command::Lg { n, op } => lg(&LagrangianRing::shared(*n), op, ctx)?,
        Command::ThomVerify { table } => thom_verify(*table, ctx)?,
        Command::SchurBundle { rank, functor, class } => {
            let x = schur_bundle_class(functor, class, *rank)?;
            Output::new(
                json!({
                    "rank": rank,
                    "functor": partition_json(functor),
                    "class": partition_json(class),
                    "expansion": x.to_json(),
                    "nonnegative": x.is_nonnegative(),
                }),
                format!("s{class}(S{functor} E), rank {rank}\n{}", lines(&x)),
            )
            .failing_if(!x.is_nonnegative())
        }
        Command::Legendrian { expr, n } => {
            let text = expression(expr, ctx)?;
            let x = legendrian_parse(&text, *n)?;
            let bold = lagrangian_part(&x);
            let mut r = legendrian_positivity(&x);
            r.input = text;
            r = r.with_detail("degree", x.degree()).with_detail("lagrangian_part", bold.to_json());
            let negative = r.verdict == Verdict::NotNonnegative;
            let t = format!("{}  lagrangian part:\n{}", report_text(&r), lines(&bold));
            Output::new(r.to_json(), t).failing_if(negative)
        }
        Command::Partitions { d, max_part, max_length } => {
            let ps = enumerate_partitions(*d, *max_part, *max_length);
            let t: String = ps.iter().map(|p| format!("{p}\n")).collect();
            Output::new(Value::Array(ps.iter().map(partition_json).collect()), t)
        }
        Command::Conjugate { lambda } => {
            let c = lambda.conjugate();
            Output::new(partition_json(&c), format!("{c}\n"))
        }
        Command::Hook { lambda, n, m } => {
            let h = lambda.in_hook(*n, *m);
            Output::new(
                json!({"lambda": partition_json(lambda), "n": n, "m": m, "in_hook": h}),
                format!("{lambda} in ({n},{m})-hook: {h}\n"),
            )
        }
        Command::Ssyt { shape, n } => {
            let ts = enumerate_ssyt(shape, *n);
            let mut t = String::new();
            let items: Vec<Value> = ts
                .iter()
                .map(|x| {
                    let _ = writeln!(t, "{:?}", x.rows());
                    json!({"rows": x.rows(), "weight": x.weight(*n)})
                })
                .collect();
            Output::new(json!({"shape": partition_json(shape), "n": n, "count": ts.len(), "tableaux": items}), t)
        }
    })
}

fn gr(g: GrassmannianRing, op: &GrOp, ctx: &Context) -> Result<Output> {
    Ok(match op {
        GrOp::Reduce { expr } => {
            let (text, p) = polynomial(expr, ctx)?;
            let x = g.reduce(&p)?;
            Output::new(json!({"input": text, "degree": x.degree(), "expansion": x.to_json()}), lines(&x))
        }
        GrOp::Integrate { expr } => {
            let (text, p) = polynomial(expr, ctx)?;
            let v = g.integrate(&g.reduce(&p)?)?;
            Output::new(json!({"input": text, "value": v.to_string()}), format!("{v}\n"))
        }
        GrOp::Dual { lambda } => {
            let d = g.dual(lambda)?;
            Output::new(json!({"lambda": partition_json(lambda), "dual": partition_json(&d)}), format!("{d}\n"))
        }
        GrOp::Product { lambda, mu } => {
            let x = g.product(lambda, mu)?;
            Output::new(json!({"degree": x.degree(), "expansion": x.to_json()}), lines(&x))
        }
        GrOp::Pairing => {
            let m = g.pairing_matrix(ctx.mode)?;
            let ok = g.pairing_is_duality(&m)?;
            let t = format!("{} entries, duality permutation: {ok}\n", m.entries.len());
            Output::new(json!({"entries": m.to_json(), "is_duality": ok}), t).failing_if(!ok)
        }
    })
}

fn lg(l: &LagrangianRing, op: &LgOp, ctx: &Context) -> Result<Output> {
    Ok(match op {
        LgOp::Reduce { expr } => {
            let (text, p) = polynomial(expr, ctx)?;
            let x = l.reduce(&p)?;
            Output::new(json!({"input": text, "degree": x.degree(), "expansion": x.to_json()}), lines(&x))
        }
        LgOp::Integrate { expr } => {
            let (text, p) = polynomial(expr, ctx)?;
            let v = l.integrate(&l.reduce(&p)?)?;
            Output::new(json!({"input": text, "value": v.to_string()}), format!("{v}\n"))
        }
        LgOp::Dual { mu } => {
            let d = l.dual(mu)?;
            Output::new(json!({"mu": mu.parts(), "dual": d.parts()}), format!("{d}\n"))
        }
        LgOp::Restrict { lambda } => {
            let x = l.restrict(lambda)?;
            Output::new(
                json!({"lambda": partition_json(lambda), "degree": x.degree(), "expansion": x.to_json()}),
                lines(&x),
            )
        }
        LgOp::Pairing => {
            let m = l.pairing_matrix(ctx.mode)?;
            let ok = l.pairing_is_duality(&m)?;
            let t = format!("{} entries, duality permutation: {ok}\n", m.entries.len());
            Output::new(json!({"entries": m.to_json(), "is_duality": ok}), t).failing_if(!ok)
        }
        LgOp::Certificate => {
            let mut all = true;
            let mut t = String::new();
            let mut rows = Vec::new();
            for d in 0..=l.top_degree() {
                let c = l.dimension_certificate(d)?;
                all &= c.holds();
                let _ = writeln!(
                    t,
                    "degree {d}: {} monomials = {} basis + {} ideal ({})",
                    c.monomials,
                    c.basis,
                    c.ideal_rank,
                    c.holds()
                );
                rows.push(json!({
                    "degree": d,
                    "monomials": c.monomials,
                    "basis": c.basis,
                    "ideal_rank": c.ideal_rank,
                    "holds": c.holds(),
                }));
            }
            Output::new(json!({"n": l.n(), "degrees": rows, "holds": all}), t).failing_if(!all)
        }
    })
}

fn table_output<K: BasisLabel>(name: &str, reports: &[PositivityReport<K>]) -> Output {
    let failed = reports.iter().any(report_failed);
    let entries: Vec<Value> = reports.iter().map(PositivityReport::to_json).collect();
    let text: String = reports.iter().map(report_text).collect();
    Output::new(json!({"table": name, "entries": entries, "all_pass": !failed}), text).failing_if(failed)
}

fn thom_verify(table: TableArg, ctx: &Context) -> Result<Output> {
    Ok(match table {
        TableArg::Classical => table_output("classical", &verify_classical(ctx.mode)?),
        TableArg::Lagrangian => table_output("lagrangian", &verify_lagrangian(ctx.mode)?),
        TableArg::Legendrian => table_output("legendrian", &verify_legendrian(ctx.mode)?),
    })
}
