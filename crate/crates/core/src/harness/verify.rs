//! Randomized verification of the signature theorems and the step lemmas.
//!
//! Each property samples its own population (restricted to the property's
//! hypotheses), evaluates both sides exactly, and records every failing case
//! as a replayable ideal document. Case `k` of a run with seed `s` uses the
//! independent seed `case_seed(s, k)`, so results do not depend on the number
//! of worker threads.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{
    associated_primes, dimension_and_height, irreducible_decomposition, is_unmixed,
};
use crate::error::{Error, Result};
use crate::harness::digraph::{edge_ideal_from_digraph, random_digraph, WeightedOrientedGraph};
use crate::harness::format::serialize_ideal;
use crate::harness::random::{case_seed, random_ideal_with, RandomIdealSpec};
use crate::homology::{
    all_reduced_homology, betti_table, homological_invariants, koszul_complex_at_degree, Field,
    HomologicalInvariants,
};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::signature::{
    find_gap, full_polarization_trace, is_tight, polarization_step, shift_step, signature_of_ideal,
    specialize, GapDescriptor, Substitution,
};
use crate::vnumber::v_number;

macro_rules! properties {
    ($($variant:ident => $id:literal, $doc:literal;)*) => {
        /// A checkable statement about signatures or the gap-closing steps.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
        pub enum Property {
            $(#[doc = $doc] $variant,)*
        }

        impl Property {
            pub const ALL: &'static [Property] = &[$(Property::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(Property::$variant => $id,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(Property::$variant => $doc,)*
                }
            }
        }
    };
}

properties! {
    Depth => "depth",
        "depth(R/I) = depth(R/sgn(I)) for non-principal I";
    Regularity => "regularity",
        "reg(R/I) >= reg(R/sgn(I)) for non-principal I";
    AssociatedPrimes => "associated-primes",
        "Ass(I) = Ass(sgn(I)) when ht(I) >= 2";
    VNumber => "v-number",
        "v(sgn(I)) <= v(I) when ht(I) >= 2";
    Unmixed => "unmixed",
        "I unmixed iff sgn(I) unmixed when ht(I) >= 2";
    Dimension => "dimension",
        "dim(R/I) = dim(R/sgn(I)) when ht(I) >= 2";
    CohenMacaulay => "cohen-macaulay",
        "Cohen-Macaulay and Gorenstein agree on I and sgn(I) when ht(I) >= 2";
    HeightOne => "height-one",
        "I = f*L of height one: depth(R/I) = depth(R/L), reg(R/I) = reg(R/L) + deg f, sgn(I) = sgn(L)";
    Shift => "shift",
        "a shift step preserves depth, dim, Ass and Cohen-Macaulayness and does not raise v";
    PolarizationRegularity => "polarization-regularity",
        "per step: depth and dim of S/I_pol exceed those of R/I by one, reg(S/I_pol) = reg(R/I_sft)";
    RegularityBound => "regularity-bound",
        "per step: reg(R/I) and reg(S/I_pol) differ by at most q1 - p - 1";
    ColonShift => "colon-shift",
        "per step: (I_sft : x) = (I : x)_sft when p >= 1, (I : x^(q1-1)) = I_sft when p = 0";
    RegularElement => "regular-element",
        "per step: no associated prime of I_pol contains both x0 and the shifted variable";
    ShiftConsistency => "shift-consistency",
        "per step: x0 -> x gives I_sft and x0 -> x^(q1-p) gives I";
    FullTrace => "full-trace",
        "the shift chain ends at sgn(I) and the full polarization specializes to I and sgn(I) with r more depth and dim";
    Decomposition => "decomposition",
        "the irreducible components intersect to I";
    Colon => "colon",
        "(I : m) agrees with brute-force membership over the lcm box";
    Betti => "betti",
        "Betti tables are equivariant under variable relabelling and supported on the lcm lattice";
    BoxSufficiency => "box-sufficiency",
        "(I : x^a) is unchanged when a is capped by the exponents of lcm(G(I))";
    WeightedSquarefree => "weighted-squarefree",
        "J = (x^{d*supp(g)}) over squarefree I of height >= 2: sgn(J) = I with the same CM and Gorenstein verdicts";
    OrientedGraph => "oriented-graph",
        "weighted oriented graphs of height >= 2: sgn(I(D)) = sgn(I(U)), sgn(I(D)) = I(U) once sinks have weight 1, CM/Gorenstein agree";
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        Property::ALL
            .iter()
            .copied()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Population bounds and evaluation settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub count: usize,
    pub n_max: usize,
    pub q_max: usize,
    pub exp_max: u32,
    pub seed: u64,
    pub field: Field,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            count: 200,
            n_max: 4,
            q_max: 5,
            exp_max: 6,
            seed: 7,
            field: Field::Rationals,
        }
    }
}

/// One sampled instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    Ideal(MonomialIdeal),
    /// An ideal and a monomial.
    WithMonomial(MonomialIdeal, Monomial),
    /// A squarefree ideal and positive degrees `d_i`.
    Weighted(MonomialIdeal, Vec<u32>),
    Graph(WeightedOrientedGraph),
}

impl Case {
    /// Replayable document: the ideal in canonical form with the extra data
    /// in comments.
    pub fn document(&self) -> String {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        match self {
            Case::Ideal(i) => serialize_ideal(i),
            Case::WithMonomial(i, m) => format!(
                "# monomial: {}\n{}",
                join(m.exponents()),
                serialize_ideal(i)
            ),
            Case::Weighted(i, d) => format!("# degrees: {}\n{}", join(d), serialize_ideal(i)),
            Case::Graph(g) => {
                let edges: Vec<String> = g
                    .edges()
                    .iter()
                    .map(|(i, j)| format!("{}->{}", i + 1, j + 1))
                    .collect();
                format!(
                    "# edges: {}\n# weights: {}\n{}",
                    edges.join(" "),
                    join(g.weights()),
                    serialize_ideal(&edge_ideal_from_digraph(g))
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub index: usize,
    pub seed: u64,
    pub document: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub property: Property,
    pub field: Field,
    pub count: usize,
    pub passed: usize,
    /// Supplied inputs outside the property's hypotheses, with the reason.
    pub rejected: Vec<(usize, String)>,
    pub failures: Vec<CaseFailure>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passed == self.count
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}/{} passed (field {})",
            self.property, self.passed, self.count, self.field
        )?;
        for (k, why) in &self.rejected {
            writeln!(f, "  input {} rejected: {why}", k + 1)?;
        }
        for c in &self.failures {
            writeln!(
                f,
                "  case {} (seed {}) FAILED: {}",
                c.index, c.seed, c.detail
            )?;
            for line in c.document.lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn algebra<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("computation failed: {e}"))
}

fn inv(i: &MonomialIdeal, field: Field) -> std::result::Result<HomologicalInvariants, String> {
    algebra(homological_invariants(i, field, None))
}

fn gaps(i: &MonomialIdeal) -> Vec<GapDescriptor> {
    (0..i.n())
        .filter_map(|v| find_gap(i, v).ok().flatten())
        .collect()
}

impl Property {
    /// `Ok` when `ideal` satisfies the hypotheses for ideal-driven checks.
    pub fn admits(self, ideal: &MonomialIdeal) -> Check {
        if ideal.is_zero() || ideal.is_unit() {
            return Err("zero and unit ideals are excluded".into());
        }
        let height_two = || {
            ensure(!ideal.is_principal() && ideal.every_row_has_zero(), || {
                "hypothesis ht(I) >= 2 fails".into()
            })
        };
        match self {
            Property::Depth | Property::Regularity => {
                ensure(!ideal.is_principal(), || "I is principal".into())
            }
            Property::AssociatedPrimes
            | Property::VNumber
            | Property::Unmixed
            | Property::Dimension
            | Property::CohenMacaulay
            | Property::FullTrace => height_two(),
            Property::HeightOne => {
                ensure(!ideal.is_principal() && !ideal.every_row_has_zero(), || {
                    "hypothesis ht(I) = 1 with I non-principal fails".into()
                })
            }
            Property::Shift
            | Property::PolarizationRegularity
            | Property::RegularityBound
            | Property::ColonShift
            | Property::RegularElement
            | Property::ShiftConsistency => {
                height_two()?;
                ensure(!gaps(ideal).is_empty(), || "I has no gap".into())
            }
            Property::Decomposition
            | Property::Colon
            | Property::Betti
            | Property::BoxSufficiency => Ok(()),
            Property::WeightedSquarefree => {
                height_two()?;
                ensure(ideal.is_squarefree(), || "I is not squarefree".into())
            }
            Property::OrientedGraph => Err("this property samples graphs, not ideals".into()),
        }
    }

    fn ideal_spec(self, cfg: &VerifyConfig, n: usize) -> RandomIdealSpec {
        let spec = RandomIdealSpec::new(n, cfg.q_max.max(2), cfg.exp_max).retries(1);
        match self {
            Property::Depth | Property::Regularity | Property::HeightOne => spec.non_principal(),
            Property::Decomposition
            | Property::Colon
            | Property::Betti
            | Property::BoxSufficiency => spec,
            Property::WeightedSquarefree => RandomIdealSpec::new(n, cfg.q_max.max(2), 1)
                .height_two()
                .retries(1),
            _ => spec.height_two(),
        }
    }

    /// Extra data for properties that need more than an ideal.
    fn complete<R: Rng>(self, ideal: MonomialIdeal, cfg: &VerifyConfig, rng: &mut R) -> Case {
        match self {
            Property::Colon => {
                let m = (0..ideal.n())
                    .map(|_| rng.gen_range(0..=cfg.exp_max))
                    .collect();
                Case::WithMonomial(ideal, Monomial::new(m))
            }
            Property::BoxSufficiency => {
                let l = ideal.lcm_of_generators();
                let m = l
                    .exponents()
                    .iter()
                    .map(|&e| rng.gen_range(0..=e + 3))
                    .collect();
                Case::WithMonomial(ideal, Monomial::new(m))
            }
            Property::WeightedSquarefree => {
                let d = (0..ideal.n())
                    .map(|_| rng.gen_range(1..=cfg.exp_max.max(1)))
                    .collect();
                Case::Weighted(ideal, d)
            }
            _ => Case::Ideal(ideal),
        }
    }

    /// Draws case `index` of a run.
    pub fn sample(self, cfg: &VerifyConfig, index: usize) -> Result<Case> {
        let mut rng = ChaCha8Rng::seed_from_u64(case_seed(cfg.seed, index as u64));
        let n_low = match self {
            Property::Decomposition
            | Property::Colon
            | Property::Betti
            | Property::BoxSufficiency => 1,
            _ => 2,
        };
        if cfg.n_max < n_low {
            return Err(Error::Unsatisfiable(0));
        }
        const BUDGET: usize = 10_000;
        if self == Property::OrientedGraph {
            for _ in 0..BUDGET {
                let vertices = rng.gen_range(2..=cfg.n_max);
                let g = random_digraph(vertices, cfg.exp_max.max(1), &mut rng);
                if edge_ideal_from_digraph(&g).every_row_has_zero() && g.edges().len() >= 2 {
                    return Ok(Case::Graph(g));
                }
            }
            return Err(Error::Unsatisfiable(BUDGET));
        }
        for _ in 0..BUDGET {
            let n = rng.gen_range(n_low..=cfg.n_max);
            let Ok(mut ideal) = random_ideal_with(&self.ideal_spec(cfg, n), &mut rng) else {
                continue;
            };
            if self == Property::HeightOne {
                let f: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
                let f = Monomial::new(f);
                if f.is_one() || !ideal.every_row_has_zero() {
                    continue;
                }
                ideal = ideal.scale(&f)?;
            }
            if self.admits(&ideal).is_ok() {
                return Ok(self.complete(ideal, cfg, &mut rng));
            }
        }
        Err(Error::Unsatisfiable(BUDGET))
    }

    /// Evaluates the property on one case.
    pub fn check(self, case: &Case, field: Field) -> Check {
        match (self, case) {
            (Property::Colon, Case::WithMonomial(i, m)) => check_colon(i, m),
            (Property::BoxSufficiency, Case::WithMonomial(i, m)) => check_box(i, m),
            (Property::WeightedSquarefree, Case::Weighted(i, d)) => check_weighted(i, d, field),
            (Property::OrientedGraph, Case::Graph(g)) => check_graph(g, field),
            (_, Case::Ideal(i)) => {
                self.admits(i)?;
                match self {
                    Property::Depth => check_depth(i, field),
                    Property::Regularity => check_regularity(i, field),
                    Property::AssociatedPrimes => check_ass(i),
                    Property::VNumber => check_v(i),
                    Property::Unmixed => check_unmixed(i),
                    Property::Dimension => check_dim(i),
                    Property::CohenMacaulay => check_cm(i, field),
                    Property::HeightOne => check_height_one(i, field),
                    Property::Shift
                    | Property::PolarizationRegularity
                    | Property::RegularityBound
                    | Property::ColonShift
                    | Property::RegularElement
                    | Property::ShiftConsistency => {
                        for gap in gaps(i) {
                            self.check_step(i, &gap, field)
                                .map_err(|e| format!("gap in x{}: {e}", gap.variable + 1))?;
                        }
                        Ok(())
                    }
                    Property::FullTrace => check_full_trace(i, field),
                    Property::Decomposition => check_decomposition(i),
                    Property::Betti => check_betti(i, field),
                    _ => Err(format!("{self} needs more than an ideal")),
                }
            }
            _ => Err(format!("{self} cannot evaluate this kind of case")),
        }
    }

    fn check_step(self, i: &MonomialIdeal, gap: &GapDescriptor, field: Field) -> Check {
        let v = gap.variable;
        let sft = algebra(shift_step(i, gap))?;
        let (pol, d) = algebra(polarization_step(i, gap))?;
        let n = i.n();
        match self {
            Property::Shift => {
                let (a, b) = (inv(i, field)?, inv(&sft, field)?);
                ensure(a.depth == b.depth && a.dim == b.dim, || {
                    format!(
                        "depth/dim {}/{} became {}/{}",
                        a.depth, a.dim, b.depth, b.dim
                    )
                })?;
                ensure(a.cm == b.cm && a.gorenstein == b.gorenstein, || {
                    "CM/Gorenstein changed".into()
                })?;
                let (pa, pb) = (
                    algebra(associated_primes(i))?,
                    algebra(associated_primes(&sft))?,
                );
                ensure(pa == pb, || format!("Ass changed: {pa:?} vs {pb:?}"))?;
                let (va, vb) = (algebra(v_number(i))?, algebra(v_number(&sft))?);
                ensure(vb <= va, || format!("v rose from {va} to {vb}"))
            }
            Property::PolarizationRegularity => {
                let (a, p, s) = (inv(i, field)?, inv(&pol, field)?, inv(&sft, field)?);
                ensure(p.depth == a.depth + 1 && p.dim == a.dim + 1, || {
                    format!(
                        "depth/dim of S/I_pol are {}/{}, of R/I {}/{}",
                        p.depth, p.dim, a.depth, a.dim
                    )
                })?;
                ensure(p.reg == s.reg, || {
                    format!("reg(S/I_pol) = {} but reg(R/I_sft) = {}", p.reg, s.reg)
                })
            }
            Property::RegularityBound => {
                let slack = i64::from(d) - 1;
                let (a, p) = (inv(i, field)?.reg, inv(&pol, field)?.reg);
                ensure(a <= p + slack && p <= a + slack, || {
                    format!("reg(R/I) = {a}, reg(S/I_pol) = {p}, q1 - p - 1 = {slack}")
                })
            }
            Property::ColonShift => {
                if gap.p >= 1 {
                    let x = Monomial::var(n, v);
                    let lhs = algebra(sft.colon(&x))?;
                    let rhs = shift_above(&algebra(i.colon(&x))?, v, gap.q1() - 1, d - 1);
                    ensure(lhs == rhs, || {
                        format!("(I_sft : x) = {lhs} but (I : x)_sft = {rhs}")
                    })
                } else {
                    let lhs = algebra(i.colon(&Monomial::pure_power(n, v, gap.q1() - 1)))?;
                    ensure(lhs == sft, || {
                        format!("(I : x^(q1-1)) = {lhs} but I_sft = {sft}")
                    })
                }
            }
            Property::RegularElement => {
                for p in algebra(associated_primes(&pol))? {
                    ensure(!(p.contains_variable(n) && p.contains_variable(v)), || {
                        format!("{p} in Ass(I_pol) contains x0 and x{}", v + 1)
                    })?;
                }
                Ok(())
            }
            Property::ShiftConsistency => {
                let sub = |e| {
                    [Substitution {
                        new_var: 1,
                        variable: v,
                        exponent: e,
                    }]
                };
                let g = algebra(specialize(&pol, n, &sub(1)))?;
                let f = algebra(specialize(&pol, n, &sub(d)))?;
                ensure(g == sft, || format!("x0 -> x gives {g}, I_sft = {sft}"))?;
                ensure(f == *i, || format!("x0 -> x^d gives {f}, I = {i}"))
            }
            _ => unreachable!("not a step property"),
        }
    }
}

/// The shift applied with an explicit threshold: exponents of `x_v` that are
/// `>= threshold` drop by `amount`.
fn shift_above(i: &MonomialIdeal, v: usize, threshold: u32, amount: u32) -> MonomialIdeal {
    let gens = i.generators().iter().map(|g| {
        let mut e = g.exponents().to_vec();
        if e[v] >= threshold {
            e[v] -= amount;
        }
        Monomial::new(e)
    });
    MonomialIdeal::minimalize(i.n(), gens).expect("same number of variables")
}

fn sgn(i: &MonomialIdeal) -> std::result::Result<MonomialIdeal, String> {
    algebra(signature_of_ideal(i))
}

fn check_depth(i: &MonomialIdeal, field: Field) -> Check {
    let (a, b) = (inv(i, field)?.depth, inv(&sgn(i)?, field)?.depth);
    ensure(a == b, || {
        format!("depth(R/I) = {a}, depth(R/sgn(I)) = {b}")
    })
}

fn check_regularity(i: &MonomialIdeal, field: Field) -> Check {
    let (a, b) = (inv(i, field)?.reg, inv(&sgn(i)?, field)?.reg);
    ensure(a >= b, || format!("reg(R/I) = {a} < reg(R/sgn(I)) = {b}"))
}

fn check_ass(i: &MonomialIdeal) -> Check {
    let (a, b) = (
        algebra(associated_primes(i))?,
        algebra(associated_primes(&sgn(i)?))?,
    );
    ensure(a == b, || format!("Ass(I) = {a:?}, Ass(sgn(I)) = {b:?}"))
}

fn check_v(i: &MonomialIdeal) -> Check {
    let (a, b) = (algebra(v_number(i))?, algebra(v_number(&sgn(i)?))?);
    ensure(b <= a, || format!("v(I) = {a} < v(sgn(I)) = {b}"))
}

fn check_unmixed(i: &MonomialIdeal) -> Check {
    let (a, b) = (algebra(is_unmixed(i))?, algebra(is_unmixed(&sgn(i)?))?);
    ensure(a == b, || {
        format!("unmixed(I) = {a}, unmixed(sgn(I)) = {b}")
    })
}

fn check_dim(i: &MonomialIdeal) -> Check {
    let (a, b) = (
        algebra(dimension_and_height(i))?,
        algebra(dimension_and_height(&sgn(i)?))?,
    );
    ensure(a == b, || format!("(height, dim) = {a:?} vs {b:?}"))
}

fn check_cm(i: &MonomialIdeal, field: Field) -> Check {
    let (a, b) = (inv(i, field)?, inv(&sgn(i)?, field)?);
    ensure(a.cm == b.cm && a.gorenstein == b.gorenstein, || {
        format!(
            "cm/gorenstein {}/{} vs {}/{}",
            a.cm, a.gorenstein, b.cm, b.gorenstein
        )
    })
}

fn check_height_one(i: &MonomialIdeal, field: Field) -> Check {
    let (f, l) = algebra(i.gcd_factor())?;
    let (a, b) = (inv(i, field)?, inv(&l, field)?);
    ensure(a.depth == b.depth, || {
        format!("depth(R/I) = {}, depth(R/L) = {}", a.depth, b.depth)
    })?;
    ensure(a.reg == b.reg + f.degree() as i64, || {
        format!(
            "reg(R/I) = {}, reg(R/L) = {}, deg f = {}",
            a.reg,
            b.reg,
            f.degree()
        )
    })?;
    let (s, t) = (sgn(i)?, sgn(&l)?);
    ensure(s == t, || format!("sgn(I) = {s}, sgn(L) = {t}"))
}

fn check_full_trace(i: &MonomialIdeal, field: Field) -> Check {
    let t = algebra(full_polarization_trace(i))?;
    let s = sgn(i)?;
    ensure(t.signature == s, || {
        format!("chain ends at {} not {s}", t.signature)
    })?;
    let a = algebra(t.signature.incidence_matrix())?;
    ensure(is_tight(&a), || "endpoint has a loose row".into())?;
    for step in &t.steps {
        let m = algebra(step.ideal.incidence_matrix())?;
        ensure(!is_tight(&m), || {
            "a step started from a tight matrix".into()
        })?;
    }
    let f = algebra(t.specialize_f())?;
    ensure(f == *i, || format!("f-specialization gives {f}"))?;
    let g = algebra(t.specialize_g())?;
    ensure(g == s, || format!("g-specialization gives {g}"))?;
    let r = t.extra_vars();
    let (hi, hp, hs) = (
        algebra(dimension_and_height(i))?.0,
        algebra(dimension_and_height(&t.polarized))?.0,
        algebra(dimension_and_height(&s))?.0,
    );
    ensure(hi == hp && hp == hs, || format!("heights {hi}, {hp}, {hs}"))?;
    let (a, p) = (inv(i, field)?, inv(&t.polarized, field)?);
    ensure(p.dim == a.dim + r && p.depth == a.depth + r, || {
        format!(
            "r = {r}: dim/depth of S/I_pol {}/{}, of R/I {}/{}",
            p.dim, p.depth, a.dim, a.depth
        )
    })
}

fn check_decomposition(i: &MonomialIdeal) -> Check {
    let comps = algebra(irreducible_decomposition(i))?;
    let mut acc = comps[0].to_ideal(i.n());
    for c in &comps[1..] {
        acc = algebra(acc.intersect(&c.to_ideal(i.n())))?;
    }
    ensure(acc == *i, || format!("components intersect to {acc}"))?;
    for (k, c) in comps.iter().enumerate() {
        for (l, d) in comps.iter().enumerate() {
            ensure(
                k == l || !c.to_ideal(i.n()).contains_ideal(&d.to_ideal(i.n())),
                || "decomposition is redundant".into(),
            )?;
        }
    }
    Ok(())
}

/// Every monomial dividing `bound`.
fn box_points(bound: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bound.exponents() {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=b).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

fn check_colon(i: &MonomialIdeal, m: &Monomial) -> Check {
    let j = algebra(i.colon(m))?;
    let bound = i.lcm_of_generators();
    ensure(j.generators().iter().all(|g| g.divides(&bound)), || {
        "(I : m) has a generator outside the box".into()
    })?;
    for b in box_points(&bound) {
        let bm = b
            .checked_mul(m)
            .ok_or_else(|| "exponent overflow".to_string())?;
        let expected = algebra(i.contains(&bm))?;
        let got = algebra(j.contains(&b))?;
        ensure(expected == got, || {
            format!("membership of {b} in (I : {m}) is {got}, expected {expected}")
        })?;
    }
    Ok(())
}

fn check_box(i: &MonomialIdeal, w: &Monomial) -> Check {
    let capped = w.gcd(&i.lcm_of_generators());
    let (a, b) = (algebra(i.colon(w))?, algebra(i.colon(&capped))?);
    ensure(a == b, || {
        format!("(I : {w}) = {a} but (I : {capped}) = {b}")
    })
}

fn permuted(i: &MonomialIdeal, sigma: &[usize]) -> MonomialIdeal {
    MonomialIdeal::minimalize(i.n(), i.generators().iter().map(|g| permute(g, sigma)))
        .expect("same number of variables")
}

fn permute(m: &Monomial, sigma: &[usize]) -> Monomial {
    let mut e = vec![0; m.n()];
    for (k, &x) in m.exponents().iter().enumerate() {
        e[sigma[k]] = x;
    }
    Monomial::new(e)
}

fn check_betti(i: &MonomialIdeal, field: Field) -> Check {
    let table = algebra(betti_table(i, field))?;
    let n = i.n();

    // Relabelling equivariance with a permutation derived from the ideal.
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(i.generators().len() as u64 + 31 * n as u64);
    sigma.shuffle(&mut rng);
    let relabelled = algebra(betti_table(&permuted(i, &sigma), field))?;
    let expected: Vec<(usize, Vec<u32>, u64)> = {
        let mut v: Vec<_> = table
            .entries
            .iter()
            .map(|((k, a), r)| {
                (
                    *k,
                    permute(&Monomial::new(a.clone()), &sigma).into_exponents(),
                    *r,
                )
            })
            .collect();
        v.sort();
        v
    };
    let got: Vec<(usize, Vec<u32>, u64)> = relabelled
        .entries
        .iter()
        .map(|((k, a), r)| (*k, a.clone(), *r))
        .collect();
    ensure(expected == got, || {
        format!("relabelling by {sigma:?} changed the table")
    })?;

    // Generator order: rebuilding from reversed generators gives the same table.
    let reversed = MonomialIdeal::minimalize(n, i.generators().iter().rev().cloned())
        .expect("same number of variables");
    ensure(algebra(betti_table(&reversed, field))? == table, || {
        "generator order changed the table".into()
    })?;

    // Support: homology over every multidegree in the box.
    let mut lattice = std::collections::BTreeSet::new();
    for g in i.generators() {
        let joined: Vec<Monomial> = lattice.iter().map(|l: &Monomial| l.lcm(g)).collect();
        lattice.insert(g.clone());
        lattice.extend(joined);
    }
    for a in box_points(&i.lcm_of_generators()) {
        if a.is_one() {
            continue;
        }
        let homology = all_reduced_homology(&koszul_complex_at_degree(i, &a), field);
        for (d, r) in homology {
            let k = (d + 2) as usize;
            ensure(lattice.contains(&a), || {
                format!("beta_{{{k},{a}}} = {r} off the lcm lattice")
            })?;
            let listed = table.entries.get(&(k, a.exponents().to_vec())).copied();
            ensure(listed == Some(r), || {
                format!("beta_{{{k},{a}}} = {r}, table has {listed:?}")
            })?;
        }
    }
    Ok(())
}

fn check_weighted(i: &MonomialIdeal, d: &[u32], field: Field) -> Check {
    let gens = i
        .generators()
        .iter()
        .map(|g| Monomial::new(g.exponents().iter().zip(d).map(|(&e, &w)| e * w).collect()));
    let j = algebra(MonomialIdeal::minimalize(i.n(), gens))?;
    let s = sgn(&j)?;
    ensure(s == *i, || format!("sgn(J) = {s} for J = {j}"))?;
    let (a, b) = (inv(&j, field)?, inv(i, field)?);
    ensure(a.cm == b.cm && a.gorenstein == b.gorenstein, || {
        format!(
            "J = {j}: cm/gorenstein {}/{} vs {}/{}",
            a.cm, a.gorenstein, b.cm, b.gorenstein
        )
    })
}

fn check_graph(g: &WeightedOrientedGraph, field: Field) -> Check {
    // Raw graph: D and its capped graph U share a signature and the verdicts.
    let i = edge_ideal_from_digraph(g);
    let u = edge_ideal_from_digraph(&g.capped());
    let (si, su) = (sgn(&i)?, sgn(&u)?);
    ensure(si == su, || format!("sgn(I(D)) = {si}, sgn(I(U)) = {su}"))?;
    let (a, b) = (inv(&i, field)?, inv(&u, field)?);
    ensure(a.cm == b.cm && a.gorenstein == b.gorenstein, || {
        "CM/Gorenstein of I(D) and I(U) differ".into()
    })?;

    // With sink weights normalized every heavy head is a tail, and the
    // signature is the capped edge ideal itself.
    let h = g.with_unit_sinks();
    debug_assert!(h.heavy_heads_are_tails());
    let ih = edge_ideal_from_digraph(&h);
    let uh = edge_ideal_from_digraph(&h.capped());
    let s = sgn(&ih)?;
    ensure(s == uh, || format!("sgn(I(D')) = {s}, I(U') = {uh}"))?;
    let (a, b) = (inv(&ih, field)?, inv(&uh, field)?);
    ensure(a.cm == b.cm && a.gorenstein == b.gorenstein, || {
        "CM/Gorenstein of I(D') and I(U') differ".into()
    })
}

fn evaluate(
    property: Property,
    cfg: &VerifyConfig,
    index: usize,
) -> std::result::Result<(), CaseFailure> {
    let seed = case_seed(cfg.seed, index as u64);
    let fail = |document: String, detail: String| CaseFailure {
        index,
        seed,
        document,
        detail,
    };
    let case = property
        .sample(cfg, index)
        .map_err(|e| fail(String::new(), format!("sampling failed: {e}")))?;
    property
        .check(&case, cfg.field)
        .map_err(|detail| fail(case.document(), detail))
}

/// Samples `cfg.count` cases and checks each.
pub fn run_verify(property: Property, cfg: &VerifyConfig) -> VerifyReport {
    let work = |k: usize| evaluate(property, cfg, k);
    #[cfg(feature = "parallel")]
    let results: Vec<_> = (0..cfg.count).into_par_iter().map(work).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = (0..cfg.count).map(work).collect();
    let failures: Vec<CaseFailure> = results.into_iter().filter_map(|r| r.err()).collect();
    VerifyReport {
        property,
        field: cfg.field,
        count: cfg.count,
        passed: cfg.count - failures.len(),
        rejected: Vec::new(),
        failures,
    }
}

/// Checks supplied ideals. Ideals outside the hypotheses are rejected, not
/// counted; extra data (monomials, degrees) is drawn from `cfg.seed`.
pub fn verify_ideals(
    property: Property,
    ideals: &[MonomialIdeal],
    cfg: &VerifyConfig,
) -> VerifyReport {
    let mut rejected = Vec::new();
    let mut cases = Vec::new();
    for (k, i) in ideals.iter().enumerate() {
        match property.admits(i) {
            Ok(()) => {
                let mut rng = ChaCha8Rng::seed_from_u64(case_seed(cfg.seed, k as u64));
                cases.push((k, property.complete(i.clone(), cfg, &mut rng)));
            }
            Err(why) => rejected.push((k, why)),
        }
    }
    let failures: Vec<CaseFailure> = cases
        .iter()
        .filter_map(|(k, c)| {
            property
                .check(c, cfg.field)
                .err()
                .map(|detail| CaseFailure {
                    index: *k,
                    seed: cfg.seed,
                    document: c.document(),
                    detail,
                })
        })
        .collect();
    VerifyReport {
        property,
        field: cfg.field,
        count: cases.len(),
        passed: cases.len() - failures.len(),
        rejected,
        failures,
    }
}
