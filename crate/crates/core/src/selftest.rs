//! A corpus of small worked examples with known answers, run by
//! `monocycle selftest` and by the test suite.

use rayon::prelude::*;
use serde::Serialize;

use crate::boundary_ideal::{
    boundary_ideal, boundary_ideal_from_circuits, is_boundary_monomial_cycle, lower_bound, sector_ideal,
};
use crate::error::Error;
use crate::exactalg::FieldSpec;
use crate::golod::{golod4, monomial_products_vanish};
use crate::koszul::{self, KoszulChain};
use crate::linquot::{self, LinQuotFailure};
use crate::monomials::{Monomial, MonomialIdeal, VarSet};
use crate::simplicial_matroid::{build_sign_matrix, circuits_through, row_rank, sgn, Circuit, SignMatrixSpec};
use crate::symmetric::{self, Partition, SymmetricIdealSpec};

const Q: FieldSpec = FieldSpec::RATIONALS;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("prime")
}

/// Parses `x1^2*x2`-style monomials in `n` variables; panics on bad input.
pub fn mono(n: usize, s: &str) -> Monomial {
    crate::io::parse_monomial(n, s).expect("fixture monomial")
}

pub fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|g| mono(n, g)).collect()).expect("fixture ideal")
}

pub fn set(v: &[usize]) -> VarSet {
    VarSet::from_indices(crate::monomials::MAX_VARS, v.iter().copied()).expect("fixture set")
}

/// `(x1x3, x1x4, x2x3, x2x4)`.
pub fn j_ideal() -> MonomialIdeal {
    ideal(4, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"])
}

/// `(x1x3, x2x3)` in three variables.
pub fn i3() -> MonomialIdeal {
    ideal(3, &["x1*x3", "x2*x3"])
}

/// Stanley–Reisner ideal of the six-vertex real projective plane.
pub fn rp2() -> MonomialIdeal {
    ideal(
        6,
        &[
            "x1*x2*x3", "x1*x2*x4", "x1*x3*x5", "x1*x4*x6", "x1*x5*x6", "x2*x3*x6", "x2*x4*x5", "x2*x5*x6", "x3*x4*x5",
            "x3*x4*x6",
        ],
    )
}

pub fn spec(n: usize, lambdas: &[&[u32]]) -> SymmetricIdealSpec {
    SymmetricIdealSpec::new(n, lambdas.iter().map(|l| Partition::new(l.to_vec()).expect("partition")).collect())
        .expect("fixture spec")
}

/// The symmetric ideal generated by the orbits of `(3,0,0,0)` and `(2,1,0,0)`.
pub fn sixteen() -> MonomialIdeal {
    symmetric::ideal_from_partitions(&spec(4, &[&[3, 0, 0, 0], &[2, 1, 0, 0]]))
}

/// `J + (x5²)` in five variables.
pub fn five_var() -> MonomialIdeal {
    ideal(5, &["x1*x3", "x1*x4", "x2*x3", "x2*x4", "x5^2"])
}

/// The table of four-variable symmetric ideals with their `V_p` sets.
pub fn symmetric_table() -> Vec<(SymmetricIdealSpec, Vec<usize>)> {
    vec![
        (spec(4, &[&[3, 1, 0, 0], &[2, 2, 0, 0]]), vec![2, 3, 4]),
        (spec(4, &[&[3, 0, 0, 0], &[2, 1, 0, 0]]), vec![2, 3]),
        (spec(4, &[&[3, 0, 0, 0], &[2, 1, 1, 0]]), vec![3, 4]),
        (spec(4, &[&[2, 0, 0, 0], &[1, 1, 1, 1]]), vec![4]),
        (spec(4, &[&[2, 0, 0, 0]]), vec![]),
    ]
}

#[derive(Debug)]
struct Mismatch(String);

impl From<Error> for Mismatch {
    fn from(e: Error) -> Self {
        Mismatch(format!("unexpected error: {e}"))
    }
}

type Check = Result<(), Mismatch>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Mismatch(msg()))
    }
}

fn same<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Check {
    ensure(got == want, || format!("got {got:?}, want {want:?}"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

type Fixture = (&'static str, fn() -> Check);

fn fixtures() -> Vec<Fixture> {
    vec![
        ("colon J:x1", || same(j_ideal().colon_monomial(&mono(4, "x1")), ideal(4, &["x3", "x4"]))),
        ("colon J:x1x2", || same(j_ideal().colon_monomial(&mono(4, "x1*x2")), ideal(4, &["x3", "x4"]))),
        ("colon J:(x1,x2)", || same(j_ideal().colon_varset(set(&[1, 2]))?, ideal(4, &["x3", "x4"]))),
        ("colon J:(x1,x2,x3)", || same(j_ideal().colon_varset(set(&[1, 2, 3]))?, j_ideal())),
        ("colon I3:(x1,x2)", || same(i3().colon_varset(set(&[1, 2]))?, ideal(3, &["x3"]))),
        ("lower bound of I3 at {1,2}", || {
            same(lower_bound(&i3(), set(&[1, 2]))?, ideal(3, &["x1*x3", "x2*x3", "x3^2"]))
        }),
        ("colon product of J inside J+(x3,x4)^2", || {
            let j = j_ideal();
            let prod = j.colon_monomial(&mono(4, "x1")).product(&j.colon_monomial(&mono(4, "x2")))?;
            let m34 = ideal(4, &["x3", "x4"]);
            same(prod.clone(), m34.product(&m34)?)?;
            let target = j.sum(&m34.product(&m34)?)?;
            ensure(prod.is_subset_of(&target)? && target.contains(&mono(4, "x3*x4")), || "inclusion fails".into())
        }),
        ("(x3) not inside B of I3", || {
            ensure(!ideal(3, &["x3"]).is_subset_of(&ideal(3, &["x1*x3", "x2*x3", "x3^2"]))?, || {
                "inclusion holds".into()
            })
        }),
        ("M(4,3) rank", || same(build_sign_matrix(SignMatrixSpec::new(4, 3, Q)?)?.rank(), 1)),
        ("sign of 4 and 3 in {1,2,3,4}", || same((sgn(set(&[1, 2, 3, 4]), 4)?, sgn(set(&[1, 2, 3, 4]), 3)?), (-1, 1))),
        ("M(4,3) column", || same(sign_rows(4, 3)?, vec![vec![-1], vec![1], vec![-1], vec![1]])),
        ("M(4,2) row 12", || same(sign_rows(4, 2)?[0].clone(), vec![1, 1, 0, 0])),
        ("M(4,1) row 1", || same(sign_rows(4, 1)?[0].clone(), vec![-1, -1, -1, 0, 0, 0])),
        ("circuits of M(4,2) through 12", || {
            let want: Vec<Circuit> = [
                vec![set(&[1, 2]), set(&[1, 3]), set(&[1, 4])],
                vec![set(&[1, 2]), set(&[2, 3]), set(&[2, 4])],
                vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 4]), set(&[3, 4])],
                vec![set(&[1, 2]), set(&[1, 4]), set(&[2, 3]), set(&[3, 4])],
            ]
            .into_iter()
            .map(Circuit::new)
            .collect();
            for f in [Q, gf(2), gf(3)] {
                let mut got = circuits_through(SignMatrixSpec::new(4, 2, f)?, set(&[1, 2]))?;
                got.sort();
                let mut w = want.clone();
                w.sort();
                same(got, w)?;
            }
            Ok(())
        }),
        ("circuits of M(4,1) through 1", || {
            same(
                circuits_through(SignMatrixSpec::new(4, 1, Q)?, set(&[1]))?,
                vec![Circuit::new(vec![set(&[1]), set(&[2]), set(&[3]), set(&[4])])],
            )
        }),
        ("RP2 triangle rows dependent only in characteristic 2", || {
            let rows: Vec<VarSet> = rp2().gens().iter().map(Monomial::support).collect();
            same(
                (row_rank(SignMatrixSpec::new(6, 3, gf(2))?, &rows)?, row_rank(SignMatrixSpec::new(6, 3, Q)?, &rows)?),
                (9, 10),
            )
        }),
        ("differential of x4 e123 over J", || {
            let c = KoszulChain::monomial(Q, mono(4, "x4"), set(&[1, 2, 3]));
            same(koszul::differential(&j_ideal(), &c), KoszulChain::monomial(Q, mono(4, "x3*x4"), set(&[1, 2])))
        }),
        ("differential of x3 e123 over I3", || {
            same(
                koszul::differential(&i3(), &KoszulChain::monomial(Q, mono(3, "x3"), set(&[1, 2, 3]))),
                KoszulChain::monomial(Q, mono(3, "x3^2"), set(&[1, 2])),
            )
        }),
        ("H3 of J at (1,1,1,1)", || same(koszul::strand_homology_dim(&j_ideal(), 3, &mono(4, "[1,1,1,1]"), Q)?, 1)),
        ("H3 of RP2 at (1,...,1)", || {
            let a = mono(6, "[1,1,1,1,1,1]");
            same(
                (koszul::strand_homology_dim(&rp2(), 3, &a, gf(2))?, koszul::strand_homology_dim(&rp2(), 3, &a, Q)?),
                (1, 0),
            )
        }),
        ("total Betti numbers of J", || same(koszul::total_betti(&j_ideal(), Q)?, vec![4, 4, 1, 0])),
        ("fourth Betti number of J+(x5^2)", || same(koszul::total_betti(&five_var(), Q)?[3], 1)),
        ("x3^2 e12 is a boundary over I3", || {
            let z = KoszulChain::monomial(Q, mono(3, "x3^2"), set(&[1, 2]));
            let w = koszul::is_boundary_oracle(&i3(), &z)?.ok_or_else(|| Mismatch("no preimage".into()))?;
            same(w, KoszulChain::monomial(Q, mono(3, "x3"), set(&[1, 2, 3])))
        }),
        ("x3 e12 is not a boundary over I3", || {
            let z = KoszulChain::monomial(Q, mono(3, "x3"), set(&[1, 2]));
            same(koszul::is_boundary_oracle(&i3(), &z)?, None)
        }),
        ("x3x4 e12 is a boundary over (x1x2,x1x4,x2x3)", || {
            let i = ideal(4, &["x1*x2", "x1*x4", "x2*x3"]);
            let z = KoszulChain::monomial(Q, mono(4, "x3*x4"), set(&[1, 2]));
            ensure(koszul::is_boundary_oracle(&i, &z)?.is_some(), || "no preimage".into())?;
            let w = KoszulChain::monomial(Q, mono(4, "x4"), set(&[1, 2, 3])).add(&KoszulChain::monomial(
                Q,
                mono(4, "x2"),
                set(&[1, 3, 4]),
            ));
            same(koszul::differential(&i, &w), z)
        }),
        ("product of x3 e1 and x4 e2", || {
            let w = koszul::wedge(
                &KoszulChain::monomial(Q, mono(4, "x3"), set(&[1])),
                &KoszulChain::monomial(Q, mono(4, "x4"), set(&[2])),
            );
            same(w, KoszulChain::monomial(Q, mono(4, "x3*x4"), set(&[1, 2])))
        }),
        ("product of x1x2 e12 and x3x4 e34 is a nonzero class", || {
            let i = sixteen();
            let w = koszul::wedge(
                &KoszulChain::monomial(Q, mono(4, "x1*x2"), set(&[1, 2])),
                &KoszulChain::monomial(Q, mono(4, "x3*x4"), set(&[3, 4])),
            );
            same(w.clone(), KoszulChain::monomial(Q, mono(4, "x1*x2*x3*x4"), set(&[1, 2, 3, 4])))?;
            same(koszul::is_boundary_oracle(&i, &w)?, None)
        }),
        ("monomial span deficit of J", || {
            same(koszul::monomial_span_deficit(&j_ideal(), 3, Q)?, vec![(mono(4, "[1,1,1,1]"), 1)])?;
            same(koszul::monomial_span_deficit(&j_ideal(), 2, Q)?, vec![])
        }),
        ("monomial span deficit of the (2,1,1,0) orbit ideal", || {
            let i = symmetric::ideal_from_partitions(&spec(4, &[&[2, 1, 1, 0]]));
            ensure(!koszul::monomial_span_deficit(&i, 3, Q)?.is_empty(), || "no deficit".into())
        }),
        ("sector ideal of J for {1,2} and {3,4}", || {
            same(sector_ideal(&j_ideal(), set(&[1, 2]), set(&[3, 4]))?, ideal(4, &["x3^2*x4", "x3*x4^2"]))
        }),
        ("boundary ideal of I3 at {1,2}", || {
            for f in [Q, gf(2), gf(3)] {
                same(boundary_ideal(&i3(), set(&[1, 2]), f)?.ideal, ideal(3, &["x1*x3", "x2*x3", "x3^2"]))?;
            }
            Ok(())
        }),
        ("boundary ideal of J at {1,2}", || {
            let m34 = ideal(4, &["x3", "x4"]);
            same(boundary_ideal_from_circuits(&j_ideal(), set(&[1, 2]), Q)?, j_ideal().sum(&m34.product(&m34)?)?)
        }),
        ("boundary ideal of J at {1,2,3}", || {
            let j = j_ideal();
            let want = j.sum(&j.colon_varset(set(&[1, 2, 3]))?.times_monomial(&mono(4, "x4")))?;
            same(boundary_ideal_from_circuits(&j, set(&[1, 2, 3]), Q)?, want)
        }),
        ("x3 e12 and x3^2 e12 over I3", || {
            same(
                (
                    is_boundary_monomial_cycle(&i3(), &mono(3, "x3"), set(&[1, 2]), Q)?,
                    is_boundary_monomial_cycle(&i3(), &mono(3, "x3^2"), set(&[1, 2]), Q)?,
                ),
                (false, true),
            )
        }),
        ("x4x5x6 e123 over RP2", || {
            let u = mono(6, "x4*x5*x6");
            same(
                (
                    is_boundary_monomial_cycle(&rp2(), &u, set(&[1, 2, 3]), gf(2))?,
                    is_boundary_monomial_cycle(&rp2(), &u, set(&[1, 2, 3]), Q)?,
                ),
                (false, true),
            )
        }),
        ("monomial products vanish for J", || {
            ensure(monomial_products_vanish(&j_ideal(), Q)?.holds, || "fails".into())
        }),
        ("monomial products fail for the sixteen-generator ideal", || {
            let r = monomial_products_vanish(&sixteen(), Q)?;
            let f = r.failures.first().ok_or_else(|| Mismatch("holds".into()))?;
            same((f.p, f.witness.clone()), (4, mono(4, "x1*x2*x3*x4")))
        }),
        ("monomial products of J+(x5^2) fail in degree two", || {
            let i = five_var();
            let r = monomial_products_vanish(&i, Q)?;
            let f = r.failures.first().ok_or_else(|| Mismatch("holds".into()))?;
            same((f.p, f.witness.clone()), (2, mono(5, "x3*x5")))?;
            let w = KoszulChain::monomial(Q, mono(5, "x3*x5"), set(&[1, 5]));
            same(koszul::is_boundary_oracle(&i, &w)?, None)
        }),
        ("four-variable Golod test of J", || ensure(golod4(&j_ideal())?.holds, || "not Golod".into())),
        ("sixteen-generator ideal is a non-Golod product", || {
            let m = ideal(4, &["x1", "x2", "x3", "x4"]);
            let sq = ideal(4, &["x1^2", "x2^2", "x3^2", "x4^2"]);
            same(sixteen(), m.product(&sq)?)?;
            ensure(!golod4(&sixteen())?.holds, || "Golod".into())
        }),
        ("H1 x H3 pairing of J+(x5^2)", || {
            let pairs = koszul::homology_product_pairing(&five_var(), 1, 3, Q)?;
            ensure(pairs.iter().map(|e| e.rank).sum::<usize>() >= 1, || "pairing vanishes".into())
        }),
        ("orbit ideal of (2,1,0),(1,1,1)", || {
            let i = symmetric::ideal_from_partitions(&spec(3, &[&[2, 1, 0], &[1, 1, 1]]));
            same(i, ideal(3, &["x1^2*x2", "x1^2*x3", "x1*x2^2", "x2^2*x3", "x1*x3^2", "x2*x3^2", "x1*x2*x3"]))
        }),
        ("sixteen-generator ideal and its partitions", || {
            same(sixteen().gens().len(), 16)?;
            same(symmetric::partitions_from_ideal(&sixteen()), Some(spec(4, &[&[3, 0, 0, 0], &[2, 1, 0, 0]])))
        }),
        ("critical exponent of (3,0,0,0),(2,1,0,0) at p=4, q=2", || {
            same(symmetric::critical_exponent(&spec(4, &[&[3, 0, 0, 0], &[2, 1, 0, 0]]), 4, 2)?, Some(1))
        }),
        ("V_p table in four variables", || {
            for (s, want) in symmetric_table() {
                let got: Vec<usize> = (2..=4)
                    .filter_map(|p| symmetric::vp_check(&s, p).map(|r| r.holds.then_some(p)).transpose())
                    .collect::<Result<_, _>>()?;
                same(got, want)?;
            }
            Ok(())
        }),
        ("symmetric vanishing fails for (3,0,0,0),(2,1,0,0)", || {
            ensure(!symmetric::symmetric_monprod_vanish(&spec(4, &[&[3, 0, 0, 0], &[2, 1, 0, 0]]))?.holds, || {
                "holds".into()
            })
        }),
        ("symmetric vanishing holds for (3,1,0,0),(2,2,0,0)", || {
            ensure(symmetric::symmetric_monprod_vanish(&spec(4, &[&[3, 1, 0, 0], &[2, 2, 0, 0]]))?.holds, || {
                "fails".into()
            })
        }),
        ("Golod verdicts on the symmetric table", || {
            let t = symmetric_table();
            let ideals: Vec<MonomialIdeal> = t.iter().map(|(s, _)| symmetric::ideal_from_partitions(s)).collect();
            same(
                (golod4(&ideals[0])?.holds, golod4(&ideals[1])?.holds, golod4(&ideals[4])?.holds),
                (true, false, false),
            )
        }),
        ("principal (2,0,0,0) is not Golod", || {
            same(symmetric::principal_golod(&Partition::new(vec![2, 0, 0, 0])?)?, false)
        }),
        ("(3,1,0,0),(2,2,0,0) is not symmetric shifted", || {
            same(symmetric::is_symmetric_shifted(&spec(4, &[&[3, 1, 0, 0], &[2, 2, 0, 0]])), false)?;
            let i = symmetric::ideal_from_partitions(&spec(4, &[&[3, 1, 0, 0], &[2, 2, 0, 0]]));
            same(linquot::recognize(&i).symmetric_shifted, false)
        }),
        ("linear quotient sets of J", || {
            let order = ["x1*x3", "x1*x4", "x2*x3", "x2*x4"].map(|g| mono(4, g));
            let lq = linquot::check_linear_quotients(&j_ideal(), &order)
                .ok_or_else(|| Mismatch("no linear quotients".into()))?;
            same(lq.sets, vec![VarSet::EMPTY, set(&[3]), set(&[1]), set(&[1, 3])])
        }),
        ("(x1^5,x1^4x2,x1x2^4,x2^5) has no linear quotients", || {
            same(linquot::find_linear_quotients_order(&ideal(2, &["x1^5", "x1^4*x2", "x1*x2^4", "x2^5"]))?, None)
        }),
        ("J has a linear quotient order with regular decomposition", || {
            let lq = linquot::find_linear_quotients_order(&j_ideal())?.ok_or_else(|| Mismatch("no order".into()))?;
            ensure(linquot::check_linear_quotients(&j_ideal(), &lq.order).as_ref() == Some(&lq), || {
                "invalid order".into()
            })?;
            same((linquot::is_regular(&lq), linquot::nice_lift_indices(&lq)), (true, None))
        }),
        ("(x1x2x4,x1x2x5,x1x3x5) under revlex is not regular", || {
            let i = ideal(5, &["x1*x2*x4", "x1*x2*x5", "x1*x3*x5"]);
            ensure(linquot::find_linear_quotients_order(&i)?.is_some(), || "no order".into())?;
            let lq = linquot::check_linear_quotients(&i, &linquot::revlex_order(&i))
                .ok_or_else(|| Mismatch("no linear quotients under revlex".into()))?;
            same(linquot::is_regular(&lq), false)
        }),
        ("mapping cone Betti numbers of J", || {
            let lq = linquot::find_linear_quotients_order(&j_ideal())?.ok_or_else(|| Mismatch("no order".into()))?;
            same(linquot::mapping_cone_betti(&lq)?, vec![4, 4, 1])
        }),
        ("J fails the nice lift hypothesis", || match linquot::monomial_basis(&j_ideal()) {
            Err(Error::Hypothesis(LinQuotFailure::NoNiceLifts(_))) => Ok(()),
            other => Err(Mismatch(format!("got {other:?}"))),
        }),
        ("max(u) is a valid lift for stable and matroidal ideals", || {
            let m3 = ideal(3, &["x1", "x2", "x3"]);
            for i in [m3.product(&m3)?, ideal(3, &["x1*x2", "x1*x3", "x2*x3"])] {
                let lq = linquot::check_linear_quotients(&i, &linquot::revlex_order(&i))
                    .ok_or_else(|| Mismatch("no linear quotients under revlex".into()))?;
                for (j, u) in lq.order.iter().enumerate() {
                    ensure(linquot::is_valid_lift(&lq, j, u.max_var()), || format!("x{} fails for {u}", u.max_var()))?;
                }
            }
            linquot::monomial_basis(&ideal(3, &["x1*x2", "x1*x3", "x2*x3"]))?;
            Ok(())
        }),
        ("m(u) is a valid lift for a symmetric shifted ideal", || {
            let i = symmetric::ideal_from_partitions(&spec(3, &[&[2, 1, 0], &[1, 1, 1]]));
            let lq = linquot::check_linear_quotients(&i, &linquot::shifted_order(&i))
                .ok_or_else(|| Mismatch("no linear quotients under the shifted order".into()))?;
            for (j, u) in lq.order.iter().enumerate() {
                let top = u.exponents().iter().copied().max().unwrap_or(0);
                let m = (1..=u.n()).filter(|&i| u.exp(i) == top).max().unwrap_or(1);
                ensure(linquot::is_valid_lift(&lq, j, m), || format!("x{m} fails for {u}"))?;
            }
            Ok(())
        }),
    ]
}

fn sign_rows(n: usize, p: usize) -> Result<Vec<Vec<i64>>, Mismatch> {
    let m = build_sign_matrix(SignMatrixSpec::new(n, p, Q)?)?;
    Ok((0..m.rows()).map(|i| m.row(i).iter().map(|s| s.as_i64(Q).expect("integer entry")).collect()).collect())
}

/// Names of all fixtures, in run order.
pub fn fixture_names() -> Vec<&'static str> {
    fixtures().into_iter().map(|(n, _)| n).collect()
}

/// Runs every fixture; outcomes are in a fixed order.
pub fn run() -> Vec<FixtureOutcome> {
    fixtures()
        .into_par_iter()
        .map(|(name, f)| {
            let r = f();
            FixtureOutcome { name, passed: r.is_ok(), detail: r.err().map(|m| m.0) }
        })
        .collect()
}
