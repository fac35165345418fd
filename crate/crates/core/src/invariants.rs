//! Trace invariants on doubled-quiver representation spaces.
//!
//! A cycle in the doubled quiver gives a function on representations: the
//! trace of the product of arrow matrices along the cycle. Pulled back
//! through the adjoint extension, these functions are invariant under the
//! isometry group attached to the base quiver, and degree-bounded products
//! of them span the invariants of bounded degree.
//!
//! Candidate generation enumerates cycles up to rotation and then prunes
//! candidates that agree, as functions, on a seeded probe set. Pruning keeps
//! the first cycle in (length, word) order of each class, so output is
//! deterministic. Equality on the probe set is exact; for low-degree
//! polynomials over random rational points, a collision across the whole
//! probe set other than by identity is not a practical concern, and pruning
//! is only an economy measure: a missed merge keeps a redundant generator,
//! it never drops a function class.

use crate::groups::{
    act, adjoint_extend, random_representation, sample_group_element, sign_group_elements,
    GroupElement, GroupSpec, Representation,
};
use crate::matrix::Matrix;
use crate::modp::{rat_to_fp, EchelonFp, Fp};
use crate::quiver::{ArrowId, Cycle, DimensionVector, DoubledQuiver, Quiver};
use crate::scalar::{Rat, SampleBounds, Scalar};
use crate::seeding::{substream_rng, Stream};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Probe sets for duplicate pruning are capped at this size; beyond it the
/// extra points add cost without adding meaningful separating power.
const DEDUP_PROBE_CAP: usize = 48;

/// Fixed seed for the pruning probe set, independent of user seeds so the
/// generator list for a quiver never varies between runs.
const DEDUP_SEED: u64 = 0x7a5c_e11a;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TraceInvariant {
    pub cycle: Cycle,
}

impl TraceInvariant {
    pub fn degree(&self) -> usize {
        self.cycle.len()
    }

    /// Human-readable word, star arrows marked: "a0 a2*".
    pub fn display(&self, dq: &DoubledQuiver) -> String {
        self.cycle
            .word()
            .iter()
            .map(|id| match dq.arrow(*id) {
                Some(a) if a.is_star => format!("a{}*", a.base.0),
                Some(a) => format!("a{}", a.base.0),
                None => format!("a{}?", id.0),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self, dq: &DoubledQuiver) -> serde_json::Value {
        serde_json::json!({
            "word": self.cycle.word().iter().map(|a| a.0).collect::<Vec<u32>>(),
            "length": self.cycle.len(),
            "display": self.display(dq),
        })
    }
}

fn arrow_matrix<'a, S: Scalar>(r: &'a Representation<S>, id: ArrowId) -> Result<&'a Matrix<S>> {
    r.matrices
        .get(&id.0)
        .ok_or_else(|| Error::ShapeMismatch(format!("missing matrix for arrow {}", id.0)))
}

/// Product of the two arrow matrices `second * first`, memoized.
fn pair_product<'a, S: Scalar>(
    cache: &'a mut BTreeMap<(u32, u32), Matrix<S>>,
    r: &Representation<S>,
    first: ArrowId,
    second: ArrowId,
) -> Result<&'a Matrix<S>> {
    let key = (second.0, first.0);
    if !cache.contains_key(&key) {
        let m = arrow_matrix(r, second)?.mul(arrow_matrix(r, first)?)?;
        cache.insert(key, m);
    }
    Ok(cache.get(&key).expect("just inserted"))
}

/// Evaluate many cycles on one representation, sharing length-2 subproducts.
/// Words of length up to 4 avoid forming the full product matrix.
pub fn evaluate_cycles<S: Scalar>(cycles: &[Cycle], r: &Representation<S>) -> Result<Vec<S>> {
    let mut cache: BTreeMap<(u32, u32), Matrix<S>> = BTreeMap::new();
    let mut out = Vec::with_capacity(cycles.len());
    for c in cycles {
        let w = c.word();
        let value = match w.len() {
            0 => return Err(Error::InvalidInput("empty cycle".into())),
            1 => arrow_matrix(r, w[0])?.trace()?,
            2 => arrow_matrix(r, w[1])?.trace_of_product(arrow_matrix(r, w[0])?)?,
            3 => {
                let p = pair_product(&mut cache, r, w[0], w[1])?.clone();
                arrow_matrix(r, w[2])?.trace_of_product(&p)?
            }
            4 => {
                let left = pair_product(&mut cache, r, w[2], w[3])?.clone();
                let right = pair_product(&mut cache, r, w[0], w[1])?;
                left.trace_of_product(right)?
            }
            _ => {
                let mut p = arrow_matrix(r, w[0])?.clone();
                for id in &w[1..] {
                    p = arrow_matrix(r, *id)?.mul(&p)?;
                }
                p.trace()?
            }
        };
        out.push(value);
    }
    Ok(out)
}

pub fn evaluate<S: Scalar>(inv: &TraceInvariant, r: &Representation<S>) -> Result<S> {
    Ok(evaluate_cycles(std::slice::from_ref(&inv.cycle), r)?.pop().expect("one value"))
}

/// Keep one cycle per class of functions agreeing on every probe point.
/// Buckets are refined probe by probe; the first member of each surviving
/// bucket (smallest in (length, word) order) represents its class.
fn dedup_by_evaluation(cycles: Vec<Cycle>, probes: &[Representation<Rat>]) -> Result<Vec<Cycle>> {
    if cycles.is_empty() {
        return Ok(cycles);
    }
    let mut buckets: Vec<Vec<usize>> = vec![(0..cycles.len()).collect()];
    for probe in probes {
        let active: Vec<usize> =
            buckets.iter().filter(|b| b.len() > 1).flat_map(|b| b.iter().copied()).collect();
        if active.is_empty() {
            break;
        }
        let subset: Vec<Cycle> = active.iter().map(|i| cycles[*i].clone()).collect();
        let vals = evaluate_cycles(&subset, probe)?;
        let value_of: BTreeMap<usize, &Rat> =
            active.iter().copied().zip(vals.iter()).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(buckets.len());
        for b in buckets {
            if b.len() == 1 {
                next.push(b);
                continue;
            }
            let mut split: BTreeMap<&Rat, Vec<usize>> = BTreeMap::new();
            for i in b {
                split.entry(value_of[&i]).or_default().push(i);
            }
            next.extend(split.into_values());
        }
        buckets = next;
    }
    let mut keep: Vec<usize> = buckets
        .into_iter()
        .map(|b| b.into_iter().min().expect("nonempty bucket"))
        .collect();
    keep.sort_unstable();
    Ok(keep.into_iter().map(|i| cycles[i].clone()).collect())
}

/// Probe representations for pruning: free random base representations,
/// extended by adjoints, from a fixed internal seed.
fn dedup_probes(
    dq: &DoubledQuiver,
    alpha: &DimensionVector,
    count: usize,
) -> Result<Vec<Representation<Rat>>> {
    let bounds = SampleBounds::default();
    (0..count)
        .map(|i| {
            let mut rng = substream_rng(DEDUP_SEED, Stream::DedupProbe, i as u64);
            let base = random_representation(dq.base().arrows(), alpha, &mut rng, &bounds);
            adjoint_extend(dq, &base)
        })
        .collect()
}

/// Trace-invariant generators for the doubled quiver: cycles up to rotation
/// of length at most `max_len` (default: square of the total base dimension),
/// pruned by evaluation equality on the probe set.
pub fn generate_invariants(
    dq: &DoubledQuiver,
    alpha: &DimensionVector,
    max_len: Option<usize>,
) -> Result<Vec<TraceInvariant>> {
    alpha.check_admissible(dq.base())?;
    let bound = max_len.unwrap_or_else(|| {
        let t = alpha.total();
        t * t
    });
    let candidates = dq.cycles(bound);
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let probe_count = (2 * candidates.len()).clamp(1, DEDUP_PROBE_CAP);
    let probes = dedup_probes(dq, alpha, probe_count)?;
    let kept = dedup_by_evaluation(candidates, &probes)?;
    Ok(kept.into_iter().map(|cycle| TraceInvariant { cycle }).collect())
}

#[derive(Clone, Debug)]
pub struct InvarianceOptions {
    pub n_reps: usize,
    pub n_elements: usize,
    pub seed: u64,
    pub bounds: SampleBounds,
    /// comparison tolerance for inexact backends; exact backends ignore it
    pub tolerance: f64,
}

impl Default for InvarianceOptions {
    fn default() -> Self {
        InvarianceOptions {
            n_reps: 10,
            n_elements: 50,
            seed: 0,
            bounds: SampleBounds::default(),
            tolerance: 0.0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceFailure {
    pub invariant: String,
    pub rep: usize,
    pub element: usize,
    pub deviation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub invariants: usize,
    pub representations: usize,
    pub elements: usize,
    pub pass: bool,
    pub failure_count: usize,
    /// first few failures, for diagnostics
    pub failures: Vec<InvarianceFailure>,
    pub max_deviation: f64,
}

const MAX_REPORTED_FAILURES: usize = 32;

/// Check every invariant against the group action: evaluate at seeded
/// representations before and after acting by seeded group elements.
/// Representations and elements are sampled exactly and converted, so the
/// float backend exercises the same points as the exact one.
pub fn check_invariance<S: Scalar>(
    quiver: &Quiver,
    dq: &DoubledQuiver,
    alpha: &DimensionVector,
    group: &GroupSpec,
    invariants: &[TraceInvariant],
    opts: &InvarianceOptions,
) -> Result<InvarianceReport> {
    let cycles: Vec<Cycle> = invariants.iter().map(|t| t.cycle.clone()).collect();
    let elements: Vec<GroupElement<S>> = (0..opts.n_elements)
        .map(|j| {
            let mut rng = substream_rng(opts.seed, Stream::GroupElements, j as u64);
            Ok(sample_group_element(group, &mut rng, &opts.bounds)?.convert::<S>())
        })
        .collect::<Result<_>>()?;

    let per_rep: Vec<Result<(Vec<InvarianceFailure>, f64)>> = (0..opts.n_reps)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream_rng(opts.seed, Stream::Representations, i as u64);
            let base: Representation<S> =
                random_representation(quiver.arrows(), alpha, &mut rng, &opts.bounds).convert();
            let reference = evaluate_cycles(&cycles, &adjoint_extend(dq, &base)?)?;
            let mut failures = Vec::new();
            let mut max_dev = 0.0f64;
            for (j, g) in elements.iter().enumerate() {
                let acted = act(group, g, quiver, &base)?;
                let values = evaluate_cycles(&cycles, &adjoint_extend(dq, &acted)?)?;
                for (k, (v, w)) in reference.iter().zip(values.iter()).enumerate() {
                    if !v.eq_tol(w, opts.tolerance) {
                        let dev = (v.to_f64() - w.to_f64()).abs();
                        if dev.is_finite() {
                            max_dev = max_dev.max(dev);
                        }
                        failures.push(InvarianceFailure {
                            invariant: invariants[k].display(dq),
                            rep: i,
                            element: j,
                            deviation: dev,
                        });
                    }
                }
            }
            Ok((failures, max_dev))
        })
        .collect();

    let mut failures = Vec::new();
    let mut failure_count = 0usize;
    let mut max_deviation = 0.0f64;
    for r in per_rep {
        let (f, dev) = r?;
        failure_count += f.len();
        max_deviation = max_deviation.max(dev);
        for item in f {
            if failures.len() < MAX_REPORTED_FAILURES {
                failures.push(item);
            }
        }
    }
    Ok(InvarianceReport {
        invariants: invariants.len(),
        representations: opts.n_reps,
        elements: opts.n_elements,
        pass: failure_count == 0,
        failure_count,
        failures,
        max_deviation,
    })
}

/// Same sampling discipline for an arbitrary function of the base
/// representation; used as a negative control, since a raw coordinate must
/// fail where the trace invariants pass.
pub fn check_function_invariance<F>(
    quiver: &Quiver,
    alpha: &DimensionVector,
    group: &GroupSpec,
    f: F,
    opts: &InvarianceOptions,
) -> Result<bool>
where
    F: Fn(&Representation<Rat>) -> Rat,
{
    for i in 0..opts.n_reps {
        let mut rng = substream_rng(opts.seed, Stream::Representations, i as u64);
        let base = random_representation(quiver.arrows(), alpha, &mut rng, &opts.bounds);
        let reference = f(&base);
        for j in 0..opts.n_elements {
            let mut grng = substream_rng(opts.seed, Stream::GroupElements, j as u64);
            let g = sample_group_element(group, &mut grng, &opts.bounds)?;
            if f(&act(group, &g, quiver, &base)?) != reference {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparationWitness {
    pub index: usize,
    pub invariant: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparationReport {
    pub invariants: usize,
    pub separated: bool,
    pub witness: Option<SeparationWitness>,
}

/// First invariant, in generation order, taking different values on the two
/// base representations; absence certifies equality of all listed invariants.
pub fn separation_check(
    invariants: &[TraceInvariant],
    dq: &DoubledQuiver,
    left: &Representation<Rat>,
    right: &Representation<Rat>,
) -> Result<SeparationReport> {
    let cycles: Vec<Cycle> = invariants.iter().map(|t| t.cycle.clone()).collect();
    let lv = evaluate_cycles(&cycles, &adjoint_extend(dq, left)?)?;
    let rv = evaluate_cycles(&cycles, &adjoint_extend(dq, right)?)?;
    for (k, (a, b)) in lv.iter().zip(rv.iter()).enumerate() {
        if a != b {
            return Ok(SeparationReport {
                invariants: invariants.len(),
                separated: true,
                witness: Some(SeparationWitness {
                    index: k,
                    invariant: invariants[k].display(dq),
                    left: a.to_string(),
                    right: b.to_string(),
                }),
            });
        }
    }
    Ok(SeparationReport { invariants: invariants.len(), separated: false, witness: None })
}

/// Multisets of generator indices with total degree at most `bound`,
/// ordered by (total degree, index word). Degrees must be positive.
pub(crate) fn graded_multisets(degrees: &[usize], bound: usize) -> Vec<(usize, Vec<usize>)> {
    fn rec(
        degrees: &[usize],
        start: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<(usize, Vec<usize>)>,
        total: usize,
    ) {
        for i in start..degrees.len() {
            if degrees[i] > remaining {
                continue;
            }
            current.push(i);
            out.push((total + degrees[i], current.clone()));
            rec(degrees, i, remaining - degrees[i], current, out, total + degrees[i]);
            current.pop();
        }
    }
    debug_assert!(degrees.iter().all(|d| *d > 0));
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(degrees, 0, bound, &mut current, &mut out, 0);
    out.sort();
    out
}

fn product_column(values: &[Vec<Rat>], multiset: &[usize]) -> Vec<Rat> {
    // values[point][generator]
    values
        .iter()
        .map(|row| {
            let mut acc = row[multiset[0]].clone();
            for g in &multiset[1..] {
                acc *= row[*g].clone();
            }
            acc
        })
        .collect()
}

fn product_column_fp(values: &[Vec<Fp>], multiset: &[usize]) -> Vec<Fp> {
    values
        .iter()
        .map(|row| {
            let mut acc = row[multiset[0]];
            for g in &multiset[1..] {
                acc = acc.mul(row[*g]);
            }
            acc
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SurjectivityOptions {
    pub degree_bound: usize,
    pub n_points: usize,
    pub seed: u64,
    pub bounds: SampleBounds,
}

impl Default for SurjectivityOptions {
    fn default() -> Self {
        SurjectivityOptions {
            degree_bound: 4,
            n_points: 64,
            seed: 0,
            bounds: SampleBounds::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub contained: bool,
    pub rank_ambient: usize,
    pub rank_joint: usize,
    pub samples: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurjectivityReport {
    pub degrees: Vec<DegreeReport>,
    pub ambient_generators: usize,
    pub joint_generators: usize,
    pub samples: usize,
    pub contained: bool,
}

/// Does every invariant of the full symmetry group, restricted to the
/// antisymmetric-extension subspace, come from a plain trace invariant of the
/// underlying quiver restricted to the same subspace?
///
/// Per degree k the check compares, on a shared set of sampled subspace
/// points, the column span of products (total degree <= k) of base-cycle
/// traces against the span extended by products of doubled-cycle traces.
/// Restriction preserves polynomial degree, so degreewise rank equality is
/// the right test. Values are computed exactly and compared in a fixed large
/// prime field; a true containment holds at every sampled point exactly and
/// survives the reduction unless an elimination pivot happens to vanish mod
/// the prime, an event of probability on the order of 2^-61 per pivot.
pub fn restriction_surjectivity_check(
    d: &crate::decomposition::DecompositionData,
    opts: &SurjectivityOptions,
) -> Result<SurjectivityReport> {
    let model = crate::asym::AsymModel::new(d)?;
    let dq = model.doubled();

    let ambient_candidates = dq.base_cycles(opts.degree_bound);
    let joint_candidates = dq.cycles(opts.degree_bound);

    // prune both generator lists by equality on subspace probe points; the
    // families are only ever evaluated there
    let probe_count = (2 * joint_candidates.len().max(ambient_candidates.len()))
        .clamp(1, DEDUP_PROBE_CAP);
    let probes: Vec<Representation<Rat>> = (0..probe_count)
        .map(|i| {
            let mut rng = substream_rng(opts.seed, Stream::DedupProbe, i as u64);
            adjoint_extend(dq, &model.sample(&mut rng, &opts.bounds)?)
        })
        .collect::<Result<_>>()?;
    let ambient_gens = dedup_by_evaluation(ambient_candidates, &probes)?;
    let joint_gens = dedup_by_evaluation(joint_candidates, &probes)?;

    let ambient_degrees: Vec<usize> = ambient_gens.iter().map(Cycle::len).collect();
    let joint_degrees: Vec<usize> = joint_gens.iter().map(Cycle::len).collect();
    let ambient_products = graded_multisets(&ambient_degrees, opts.degree_bound);
    let joint_products = graded_multisets(&joint_degrees, opts.degree_bound);

    let n_points = opts
        .n_points
        .max(3 * ambient_products.len().max(joint_products.len()));
    let points: Vec<Representation<Rat>> = (0..n_points)
        .map(|i| {
            let mut rng = substream_rng(opts.seed, Stream::Surjectivity, i as u64);
            adjoint_extend(dq, &model.sample(&mut rng, &opts.bounds)?)
        })
        .collect::<Result<_>>()?;

    // generator values per point, ambient list then joint list; evaluation is
    // exact, then reduced into the large prime field where elimination does
    // not suffer coefficient growth (denominators here only carry the prime
    // factors of the sample denominators, so reduction is always defined)
    let mut all_cycles = ambient_gens.clone();
    all_cycles.extend(joint_gens.iter().cloned());
    let gen_values: Vec<Vec<Rat>> = points
        .par_iter()
        .map(|p| evaluate_cycles(&all_cycles, p))
        .collect::<Result<_>>()?;
    let to_fp = |lo: usize, hi: usize| -> Result<Vec<Vec<Fp>>> {
        gen_values
            .iter()
            .map(|row| row[lo..hi].iter().map(rat_to_fp).collect())
            .collect()
    };
    let ambient_values = to_fp(0, ambient_gens.len())?;
    let joint_values = to_fp(ambient_gens.len(), all_cycles.len())?;

    let mut echelon = EchelonFp::new(n_points);
    let mut pending: Vec<(usize, Vec<Fp>)> = Vec::new();
    let mut joint_iter = joint_products.iter().peekable();
    let mut ambient_iter = ambient_products.iter().peekable();
    let mut degrees = Vec::new();
    for k in 1..=opts.degree_bound {
        while let Some((total, multiset)) = ambient_iter.peek() {
            if *total > k {
                break;
            }
            let col = product_column_fp(&ambient_values, multiset);
            echelon.insert(&col);
            ambient_iter.next();
        }
        while let Some((total, multiset)) = joint_iter.peek() {
            if *total > k {
                break;
            }
            pending.push((*total, product_column_fp(&joint_values, multiset)));
            joint_iter.next();
        }
        pending.retain(|(_, col)| !echelon.contains(col));
        let contained = pending.is_empty();
        let rank_ambient = echelon.rank();
        let rank_joint = if contained {
            rank_ambient
        } else {
            let mut union = echelon.clone();
            let mut extra = 0usize;
            for (_, col) in &pending {
                if union.insert(col) {
                    extra += 1;
                }
            }
            rank_ambient + extra
        };
        degrees.push(DegreeReport {
            degree: k,
            contained,
            rank_ambient,
            rank_joint,
            samples: n_points,
        });
    }

    let contained = degrees.iter().all(|d| d.contained);
    Ok(SurjectivityReport {
        degrees,
        ambient_generators: ambient_gens.len(),
        joint_generators: joint_gens.len(),
        samples: n_points,
        contained,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReynoldsReport {
    pub degree_bound: usize,
    pub monomials: usize,
    pub products: usize,
    pub rank_traces: usize,
    pub rank_averages: usize,
    pub rank_union: usize,
    pub equal: bool,
    pub samples: usize,
}

/// Average of f over finitely many group elements, applied to the orbit of r.
pub fn reynolds_average<F>(
    elements: &[GroupElement<Rat>],
    group: &GroupSpec,
    quiver: &Quiver,
    f: F,
    r: &Representation<Rat>,
) -> Result<Rat>
where
    F: Fn(&Representation<Rat>) -> Rat,
{
    if elements.is_empty() {
        return Err(Error::InvalidInput("empty element list".into()));
    }
    let mut total = Rat::from_integer(0.into());
    for g in elements {
        total += f(&act(group, g, quiver, r)?);
    }
    Ok(total / Rat::from_integer((elements.len() as i64).into()))
}

/// For a quiver whose symmetry group is finite (all blocks O(1)), compare the
/// span of degree-bounded products of trace invariants against the span of
/// exact group averages of all coordinate monomials of the same degrees.
/// Equality says the trace family generates everything averaging can produce.
pub fn reynolds_span_check(
    quiver: &Quiver,
    alpha: &DimensionVector,
    degree_bound: usize,
    n_points: usize,
    seed: u64,
) -> Result<ReynoldsReport> {
    let group = GroupSpec::for_quiver(quiver, alpha)?;
    let elements = sign_group_elements(&group).ok_or_else(|| {
        Error::InvalidInput("exact averaging needs a finite group: all blocks O(1)".into())
    })?;
    let dq = crate::quiver::double(quiver);
    let gens = generate_invariants(&dq, alpha, Some(degree_bound))?;
    let gen_cycles: Vec<Cycle> = gens.iter().map(|t| t.cycle.clone()).collect();
    let gen_degrees: Vec<usize> = gen_cycles.iter().map(Cycle::len).collect();
    let products = graded_multisets(&gen_degrees, degree_bound);

    // coordinate functions: one per matrix entry of each base arrow
    let mut coords: Vec<(u32, usize, usize)> = Vec::new();
    for a in quiver.arrows() {
        for i in 0..alpha.0[a.dst] {
            for j in 0..alpha.0[a.src] {
                coords.push((a.id.0, i, j));
            }
        }
    }
    let coord_degrees = vec![1usize; coords.len()];
    let monomials = graded_multisets(&coord_degrees, degree_bound);

    let n = n_points.max(3 * products.len().max(monomials.len()));
    let bounds = SampleBounds::default();
    let points: Vec<Representation<Rat>> = (0..n)
        .map(|i| {
            let mut rng = substream_rng(seed, Stream::Reynolds, i as u64);
            random_representation(quiver.arrows(), alpha, &mut rng, &bounds)
        })
        .collect();

    let ext_points: Vec<Representation<Rat>> =
        points.iter().map(|p| adjoint_extend(&dq, p)).collect::<Result<_>>()?;
    let gen_values: Vec<Vec<Rat>> = ext_points
        .par_iter()
        .map(|p| evaluate_cycles(&gen_cycles, p))
        .collect::<Result<_>>()?;
    let trace_cols: Vec<Vec<Rat>> =
        products.iter().map(|(_, m)| product_column(&gen_values, m)).collect();

    let monomial_value = |r: &Representation<Rat>, m: &[usize]| -> Rat {
        let mut acc = Rat::from_integer(1.into());
        for idx in m {
            let (arrow, i, j) = coords[*idx];
            acc *= r.matrices[&arrow].at(i, j).clone();
        }
        acc
    };
    let orbit_points: Vec<Vec<Representation<Rat>>> = points
        .par_iter()
        .map(|p| elements.iter().map(|g| act(&group, g, quiver, p)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let order = Rat::from_integer((elements.len() as i64).into());
    let avg_cols: Vec<Vec<Rat>> = monomials
        .par_iter()
        .map(|(_, m)| {
            orbit_points
                .iter()
                .map(|orbit| {
                    let mut total = Rat::from_integer(0.into());
                    for acted in orbit {
                        total += monomial_value(acted, m);
                    }
                    total / order.clone()
                })
                .collect()
        })
        .collect();

    let rank_traces = crate::matrix::column_rank(n, trace_cols.iter().cloned());
    let rank_averages = crate::matrix::column_rank(n, avg_cols.iter().cloned());
    let rank_union =
        crate::matrix::column_rank(n, trace_cols.iter().cloned().chain(avg_cols.iter().cloned()));
    Ok(ReynoldsReport {
        degree_bound,
        monomials: monomials.len(),
        products: products.len(),
        rank_traces,
        rank_averages,
        rank_union,
        equal: rank_traces == rank_averages && rank_averages == rank_union,
        samples: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{DecompositionData, Summand};
    use crate::quiver::{double, Vertex, VertexKind};

    fn o_loops(loops: u32) -> Quiver {
        Quiver::build(
            vec![Vertex { id: "v".into(), kind: VertexKind::Orthogonal }],
            (0..loops).map(|i| (i, "v".to_string(), "v".to_string())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn scalar_loop_invariants_collapse_to_plain_necklaces() {
        // one O(1) vertex, loops a, b; stars coincide with the base arrows as
        // functions, so length <= 2 classes are a, b, a^2, ab, b^2
        let q = o_loops(2);
        let dq = double(&q);
        let invs = generate_invariants(&dq, &DimensionVector(vec![1]), Some(2)).unwrap();
        assert_eq!(invs.len(), 5);
    }

    #[test]
    fn matrix_loop_invariants_keep_transpose_classes() {
        // same quiver, 2x2 blocks: hand count of distinct functions of
        // length <= 2: tr A, tr B, tr A^2, tr AB, tr AA^T, tr AB^T, tr B^2,
        // tr BB^T; reversed all-star words duplicate their base words
        let q = o_loops(2);
        let dq = double(&q);
        let invs = generate_invariants(&dq, &DimensionVector(vec![2]), Some(2)).unwrap();
        assert_eq!(invs.len(), 8);
        let displays: Vec<String> = invs.iter().map(|t| t.display(&dq)).collect();
        assert!(displays.contains(&"a0".to_string()));
        assert!(!displays.contains(&"a0*".to_string()), "tr A^T duplicates tr A");
    }

    #[test]
    fn evaluation_matches_direct_product() {
        let q = o_loops(2);
        let dq = double(&q);
        let alpha = DimensionVector(vec![3]);
        let mut rng = crate::seeding::stream_rng(11, Stream::Representations);
        let base =
            random_representation(q.arrows(), &alpha, &mut rng, &SampleBounds::default());
        let ext = adjoint_extend(&dq, &base).unwrap();
        let cycle = Cycle::from_word(vec![ArrowId(0), ArrowId(1), ArrowId(0), ArrowId(3)]);
        let by_cache = evaluate_cycles(std::slice::from_ref(&cycle), &ext).unwrap()[0].clone();
        let w = cycle.word();
        let mut p = ext.matrices[&w[0].0].clone();
        for id in &w[1..] {
            p = ext.matrices[&id.0].mul(&p).unwrap();
        }
        assert_eq!(by_cache, p.trace().unwrap());
    }

    #[test]
    fn invariance_holds_on_a_small_orthogonal_fixture() {
        let d = DecompositionData::new(2, vec![Summand::orthogonal(1, 2)]);
        let layout = crate::decomposition::from_decomposition(&d).unwrap();
        let dq = double(&layout.quiver);
        let invs = generate_invariants(&dq, &layout.alpha, Some(3)).unwrap();
        assert!(!invs.is_empty());
        let opts = InvarianceOptions { n_reps: 3, n_elements: 5, ..Default::default() };
        let report = check_invariance::<Rat>(
            &layout.quiver,
            &dq,
            &layout.alpha,
            &layout.group,
            &invs,
            &opts,
        )
        .unwrap();
        assert!(report.pass, "failures: {:?}", report.failures);
        assert_eq!(report.max_deviation, 0.0);
    }

    #[test]
    fn raw_coordinate_fails_invariance() {
        let d = DecompositionData::new(2, vec![Summand::orthogonal(1, 2)]);
        let layout = crate::decomposition::from_decomposition(&d).unwrap();
        let opts = InvarianceOptions { n_reps: 2, n_elements: 4, ..Default::default() };
        let pass = check_function_invariance(
            &layout.quiver,
            &layout.alpha,
            &layout.group,
            |r| r.matrices[&0].at(0, 1).clone(),
            &opts,
        )
        .unwrap();
        assert!(!pass);
    }

    #[test]
    fn separation_finds_a_witness_and_certifies_equality() {
        let q = o_loops(1);
        let dq = double(&q);
        let alpha = DimensionVector(vec![2]);
        let invs = generate_invariants(&dq, &alpha, Some(2)).unwrap();
        let bounds = SampleBounds::default();
        let mut rng = crate::seeding::stream_rng(4, Stream::Representations);
        let a = random_representation(q.arrows(), &alpha, &mut rng, &bounds);
        let b = random_representation(q.arrows(), &alpha, &mut rng, &bounds);
        let rep = separation_check(&invs, &dq, &a, &b).unwrap();
        assert!(rep.separated);
        assert!(rep.witness.is_some());
        let same = separation_check(&invs, &dq, &a, &a).unwrap();
        assert!(!same.separated);
        assert!(same.witness.is_none());
    }

    #[test]
    fn graded_multisets_are_ordered_and_bounded() {
        let ms = graded_multisets(&[1, 2], 3);
        // [0], [0,0], [0,0,0], [0,0,1]? no: total of [0,0,1] is 4 > 3
        let expect: Vec<(usize, Vec<usize>)> = vec![
            (1, vec![0]),
            (2, vec![0, 0]),
            (2, vec![1]),
            (3, vec![0, 0, 0]),
            (3, vec![0, 1]),
        ];
        assert_eq!(ms, expect);
    }

    #[test]
    fn surjectivity_smoke_on_two_orthogonal_lines() {
        let d = DecompositionData::new(
            2,
            vec![Summand::orthogonal(1, 1), Summand::orthogonal(1, 1)],
        );
        let opts = SurjectivityOptions { degree_bound: 2, n_points: 16, ..Default::default() };
        let report = restriction_surjectivity_check(&d, &opts).unwrap();
        assert!(report.contained, "{report:?}");
        assert_eq!(report.degrees.len(), 2);
        for dr in &report.degrees {
            assert_eq!(dr.rank_ambient, dr.rank_joint);
        }
    }

    #[test]
    fn reynolds_agrees_on_scalar_loops() {
        let q = o_loops(2);
        let report = reynolds_span_check(&q, &DimensionVector(vec![1]), 2, 8, 0).unwrap();
        assert!(report.equal, "{report:?}");
    }
}
