use std::fmt::Write as _;

use anyhow::Context;
use monocycle::boundary_ideal::{boundary_ideal as compute_boundary, is_boundary_monomial_cycle};
use monocycle::golod::{golod4 as compute_golod4, monomial_products_vanish, InclusionReport};
use monocycle::io::{parse_lambdas, parse_monomial, parse_multidegree, parse_partition, parse_varset};
use monocycle::koszul::{
    homology_product_pairing, is_boundary_oracle, multigraded_homology, strand_homology_dims, total_betti, KoszulChain,
};
use monocycle::linquot::{
    basis_cycles, basis_order, find_linear_quotients_order, is_regular, mapping_cone_betti, nice_lift_indices,
    recognize, verify_monomial_basis,
};
use monocycle::simplicial_matroid::{circuits_through_with_source, SignMatrixSpec};
use monocycle::symmetric::{is_symmetric_shifted, principal_golod, vp_check, VpClause};
use monocycle::{selftest as fixtures, Error, Monomial, MonomialIdeal};
use serde::Serialize;

use crate::report::*;
use crate::{Ctx, Status};

fn emit<R: Serialize>(ctx: &Ctx, report: &R, text: &str) -> anyhow::Result<()> {
    if ctx.json {
        println!("{}", serde_json::to_string_pretty(report)?);
    } else {
        print!("{text}");
    }
    Ok(())
}

fn vector(m: &Monomial) -> String {
    let parts: Vec<String> = m.exponents().iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn boundary_ideal(ctx: &Ctx, ideal: MonomialIdeal, sigma: &str) -> anyhow::Result<Status> {
    let sigma = parse_varset(ideal.n(), sigma)?;
    let boundary = compute_boundary(&ideal, sigma, ctx.field)?;
    let text: String = boundary.ideal.gens().iter().map(|g| format!("{g}\n")).collect();
    emit(ctx, &BoundaryIdealReport { ideal, sigma, field: ctx.field, boundary }, &text)?;
    Ok(Status::Holds)
}

pub fn is_boundary(
    ctx: &Ctx,
    ideal: MonomialIdeal,
    monomial: &str,
    sigma: &str,
    witness: bool,
) -> anyhow::Result<Status> {
    let n = ideal.n();
    let u = parse_monomial(n, monomial)?;
    let sigma = parse_varset(n, sigma)?;
    let chain = KoszulChain::monomial(ctx.field, u.clone(), sigma);
    if sigma.iter().any(|j| !ideal.contains(&u.mul_var(j))) {
        return Err(Error::NotACycle(chain.to_string()).into());
    }
    let boundary = is_boundary_monomial_cycle(&ideal, &u, sigma, ctx.field)?;
    let preimage = if witness && boundary {
        let y = is_boundary_oracle(&ideal, &chain)?.context("membership and strand oracle disagree")?;
        Some(y.to_string())
    } else {
        None
    };
    let mut text = if boundary { format!("{chain} is a boundary\n") } else { format!("{chain} is not a boundary\n") };
    if let Some(y) = &preimage {
        writeln!(text, "preimage: {y}")?;
    }
    let report = IsBoundaryReport { ideal, monomial: u, sigma, field: ctx.field, boundary, witness: preimage };
    emit(ctx, &report, &text)?;
    Ok(Status::from_bool(boundary))
}

pub fn homology(
    ctx: &Ctx,
    ideal: MonomialIdeal,
    p: Option<usize>,
    multidegree: Option<&str>,
) -> anyhow::Result<Status> {
    let n = ideal.n();
    if let Some(p) = p.filter(|&p| p > n) {
        return Err(Error::DegreeOutOfRange { n, p }.into());
    }
    let wanted = |q: usize| p.is_none_or(|p| p == q);
    let mut records = Vec::new();
    match multidegree {
        Some(a) => {
            let a = parse_multidegree(n, a)?;
            for (q, dim) in strand_homology_dims(&ideal, &a, ctx.field)?.into_iter().enumerate() {
                if wanted(q) {
                    records.push(HomologyRecord { degree: a.clone(), p: q, dim });
                }
            }
        }
        None => {
            for (a, dims) in multigraded_homology(&ideal, ctx.field)? {
                for (q, &dim) in dims.iter().enumerate().skip(1) {
                    if dim > 0 && wanted(q) {
                        records.push(HomologyRecord { degree: a.clone(), p: q, dim });
                    }
                }
            }
            records.sort_by(|x, y| {
                x.p.cmp(&y.p)
                    .then_with(|| x.degree.degree().cmp(&y.degree.degree()))
                    .then_with(|| y.degree.cmp(&x.degree))
            });
        }
    }
    let text: String =
        records.iter().map(|r| format!("p={} degree={} dim={}\n", r.p, vector(&r.degree), r.dim)).collect();
    emit(ctx, &HomologyReport { ideal, field: ctx.field, records }, &text)?;
    Ok(Status::Holds)
}

pub fn betti(ctx: &Ctx, ideal: MonomialIdeal) -> anyhow::Result<Status> {
    let betti = total_betti(&ideal, ctx.field)?;
    let text: String = betti.iter().enumerate().map(|(k, b)| format!("beta_{} = {b}\n", k + 1)).collect();
    emit(ctx, &BettiReport { ideal, field: ctx.field, betti }, &text)?;
    Ok(Status::Holds)
}

fn inclusion_text(verdict: &str, report: &InclusionReport) -> String {
    let mut text = format!("{verdict}\n");
    for f in &report.failures {
        let _ = writeln!(
            text,
            "  p={} A={} B={}: {} * {} = {} outside the target",
            f.p, f.a, f.b, f.left, f.right, f.witness
        );
    }
    text
}

pub fn golod4(ctx: &Ctx, ideal: MonomialIdeal) -> anyhow::Result<Status> {
    let report = compute_golod4(&ideal)?;
    let verdict = if report.holds { "Golod" } else { "not Golod" }.to_string();
    let text = inclusion_text(&verdict, &report);
    let holds = report.holds;
    emit(ctx, &InclusionCheckReport { ideal, field: ctx.field, verdict, report }, &text)?;
    Ok(Status::from_bool(holds))
}

pub fn monprod(ctx: &Ctx, ideal: MonomialIdeal) -> anyhow::Result<Status> {
    let report = monomial_products_vanish(&ideal, ctx.field)?;
    let verdict = if report.holds {
        "products of monomial cycles vanish (necessary conditions for Golod hold)"
    } else {
        "products of monomial cycles do not vanish (necessary conditions for Golod fail)"
    }
    .to_string();
    let text = inclusion_text(&verdict, &report);
    let holds = report.holds;
    emit(ctx, &InclusionCheckReport { ideal, field: ctx.field, verdict, report }, &text)?;
    Ok(Status::from_bool(holds))
}

pub fn pairing(ctx: &Ctx, ideal: MonomialIdeal, p: usize, q: usize) -> anyhow::Result<Status> {
    let entries = homology_product_pairing(&ideal, p, q, ctx.field)?;
    let vanishes = entries.is_empty();
    let mut text = if vanishes {
        format!("H{p} x H{q} -> H{} vanishes\n", p + q)
    } else {
        format!("H{p} x H{q} -> H{} is nonzero\n", p + q)
    };
    for e in &entries {
        writeln!(text, "  {} x {}: rank {}", vector(&e.left), vector(&e.right), e.rank)?;
    }
    emit(ctx, &PairingReport { ideal, field: ctx.field, p, q, vanishes, entries }, &text)?;
    Ok(Status::from_bool(vanishes))
}

pub fn symmetric_vp(ctx: &Ctx, lambdas: &str, p: Option<usize>) -> anyhow::Result<Status> {
    let spec = parse_lambdas(lambdas)?;
    let degrees: Vec<usize> = match p {
        Some(p) => vec![p],
        None => (2..=spec.n()).collect(),
    };
    let results = degrees.into_iter().map(|p| vp_check(&spec, p)).collect::<monocycle::Result<Vec<_>>>()?;
    let mut text = String::new();
    for r in &results {
        let via = match r.via {
            Some(VpClause::V1) => " (first clause)",
            Some(VpClause::V2) => " (second clause)",
            None => "",
        };
        writeln!(text, "p={}: {}{via}", r.p, if r.holds { "holds" } else { "fails" })?;
    }
    let holds = results.iter().all(|r| r.holds);
    emit(ctx, &VpReport { spec, holds, results }, &text)?;
    Ok(Status::from_bool(holds))
}

pub fn symmetric_principal(ctx: &Ctx, lambda: &str) -> anyhow::Result<Status> {
    let lambda = parse_partition(lambda)?;
    let golod = principal_golod(&lambda)?;
    let text = format!("{}\n", if golod { "Golod" } else { "not Golod" });
    emit(ctx, &PrincipalReport { lambda, golod }, &text)?;
    Ok(Status::from_bool(golod))
}

pub fn symmetric_shifted(ctx: &Ctx, lambdas: &str) -> anyhow::Result<Status> {
    let spec = parse_lambdas(lambdas)?;
    let shifted = is_symmetric_shifted(&spec);
    let text = format!("{}\n", if shifted { "symmetric shifted" } else { "not symmetric shifted" });
    emit(ctx, &ShiftedReport { spec, shifted }, &text)?;
    Ok(Status::from_bool(shifted))
}

pub fn linquot_basis(ctx: &Ctx, ideal: MonomialIdeal) -> anyhow::Result<Status> {
    let (lq, lifts) = match basis_order(&ideal) {
        Ok(found) => found,
        Err(Error::Hypothesis(failure)) => {
            let text = format!("no monomial basis: {failure}\n");
            let report = BasisReport {
                ideal,
                field: ctx.field,
                order: None,
                cycles: Vec::new(),
                verification: None,
                failure: Some(failure),
            };
            emit(ctx, &report, &text)?;
            return Ok(Status::Fails);
        }
        Err(e) => return Err(e.into()),
    };
    let cycles = basis_cycles(&lq, &lifts);
    let v = verify_monomial_basis(&ideal, ctx.field)?;
    let mut text: String = cycles.iter().map(|c| format!("{c}\n")).collect();
    writeln!(text, "cycles per degree: {:?}", v.counts)?;
    writeln!(text, "mapping cone:      {:?}", v.mapping_cone)?;
    writeln!(text, "Betti numbers:     {:?}", v.total_betti)?;
    writeln!(text, "{}", if v.ok() { "verified" } else { "verification failed" })?;
    let ok = v.ok();
    let report = BasisReport { ideal, field: ctx.field, order: Some(lq), cycles, verification: Some(v), failure: None };
    emit(ctx, &report, &text)?;
    Ok(Status::from_bool(ok))
}

pub fn linquot_check(ctx: &Ctx, ideal: MonomialIdeal) -> anyhow::Result<Status> {
    let recognition = recognize(&ideal);
    let (order, failure) = match basis_order(&ideal) {
        Ok((lq, _)) => (Some(lq), None),
        Err(Error::Hypothesis(f)) => (find_linear_quotients_order(&ideal)?, Some(f)),
        Err(e) => return Err(e.into()),
    };
    let regular = order.as_ref().map(is_regular);
    let lifts = order.as_ref().and_then(nice_lift_indices);
    let mut text = String::new();
    match &order {
        Some(lq) => {
            writeln!(text, "linear quotients: yes")?;
            for (u, s) in lq.order.iter().zip(&lq.sets) {
                writeln!(text, "  {u}  set = {s}")?;
            }
            writeln!(text, "regular: {}", if regular == Some(true) { "yes" } else { "no" })?;
            match &lifts {
                Some(l) => {
                    writeln!(text, "nice lifts: {}", l.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join(" "))?
                }
                None => writeln!(text, "nice lifts: none")?,
            }
        }
        None => writeln!(text, "linear quotients: no")?,
    }
    if let Some(f) = &failure {
        writeln!(text, "basis construction: {f}")?;
    }
    let flags = [
        ("stable", recognition.stable),
        ("squarefree stable", recognition.squarefree_stable),
        ("matroidal", recognition.matroidal),
        ("symmetric shifted", recognition.symmetric_shifted),
    ];
    let kinds: Vec<&str> = flags.iter().filter(|(_, b)| *b).map(|(k, _)| *k).collect();
    writeln!(text, "recognized as: {}", if kinds.is_empty() { "none".to_string() } else { kinds.join(", ") })?;
    let status = Status::from_bool(failure.is_none());
    emit(ctx, &LinquotCheckReport { ideal, recognition, order, regular, lifts, failure }, &text)?;
    Ok(status)
}

pub fn linquot_betti(ctx: &Ctx, ideal: MonomialIdeal) -> anyhow::Result<Status> {
    let order = match basis_order(&ideal) {
        Ok((lq, _)) => Some(lq),
        Err(Error::Hypothesis(_)) => find_linear_quotients_order(&ideal)?,
        Err(e) => return Err(e.into()),
    };
    let betti = order.as_ref().map(mapping_cone_betti).transpose()?;
    let text = match &betti {
        Some(b) => b.iter().enumerate().map(|(k, x)| format!("beta_{} = {x}\n", k + 1)).collect(),
        None => "no order of the generators has linear quotients\n".to_string(),
    };
    let found = betti.is_some();
    emit(ctx, &LinquotBettiReport { ideal, order, betti }, &text)?;
    Ok(Status::from_bool(found))
}

pub fn matroid_circuits(ctx: &Ctx, n: usize, p: usize, sigma: &str) -> anyhow::Result<Status> {
    let spec = SignMatrixSpec::new(n, p, ctx.field)?;
    let sigma = parse_varset(n, sigma)?;
    let (circuits, source) = circuits_through_with_source(spec, sigma)?;
    let text: String = circuits.iter().map(|c| format!("{c}\n")).collect();
    emit(ctx, &CircuitsReport { n, p, field: ctx.field, sigma, source, circuits }, &text)?;
    Ok(Status::Holds)
}

pub fn selftest(ctx: &Ctx) -> anyhow::Result<Status> {
    let outcomes = fixtures::run();
    let mut text = String::new();
    for o in &outcomes {
        if o.passed {
            writeln!(text, "ok    {}", o.name)?;
        } else {
            writeln!(text, "FAIL  {}: {}", o.name, o.detail.as_deref().unwrap_or("mismatch"))?;
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let passed = outcomes.len() - failed;
    writeln!(text, "{passed} passed, {failed} failed")?;
    let lines = outcomes
        .into_iter()
        .map(|o| FixtureLine { name: o.name.to_string(), passed: o.passed, detail: o.detail })
        .collect();
    emit(ctx, &SelftestReport { passed, failed, fixtures: lines }, &text)?;
    Ok(Status::from_bool(failed == 0))
}
