//! Executable statements of the identities tying together Tutte
//! polynomials, weight enumerators, and their harmonic versions.
//!
//! Every verifier recomputes both sides of its identity through independent
//! code paths and reports exact equality or the differing terms. The
//! identities are theorems, so on valid inputs a mismatch always means an
//! implementation bug; that is precisely what makes the seeded random
//! corpus in [`selftest`] a useful harness.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::LinearCode;
use crate::harmonic::{harmonic_basis, slice_factor, HarmonicFunction};
use crate::linalg::{FieldMatrix, PrimeField};
use crate::matroid::VectorMatroid;
use crate::poly::BivariatePoly;
use crate::scalar::{binomial, rat_pow, sign, Rational};
use crate::scan::scan_weighted_subsets;
use crate::subset::{k_subsets, Subset};
use crate::{EnumCaps, Error, Result};

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Mismatch { diff: BivariatePoly },
}

/// One verified identity instance: both sides and the verdict.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub identity: &'static str,
    pub instance: String,
    pub lhs: BivariatePoly,
    pub rhs: BivariatePoly,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn compare(
        identity: &'static str,
        instance: String,
        lhs: BivariatePoly,
        rhs: BivariatePoly,
    ) -> Self {
        let diff = &lhs - &rhs;
        let verdict = if diff.is_zero() {
            Verdict::Equal
        } else {
            Verdict::Mismatch { diff }
        };
        VerificationReport {
            identity,
            instance,
            lhs,
            rhs,
            verdict,
        }
    }

    pub fn is_equal(&self) -> bool {
        matches!(self.verdict, Verdict::Equal)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "identity: {}", self.identity)?;
        writeln!(f, "instance: {}", self.instance)?;
        writeln!(f, "lhs: {}", self.lhs)?;
        writeln!(f, "rhs: {}", self.rhs)?;
        match &self.verdict {
            Verdict::Equal => write!(f, "verdict: equal"),
            Verdict::Mismatch { diff } => write!(f, "verdict: mismatch (lhs - rhs = {diff})"),
        }
    }
}

fn describe_matrix(m: &FieldMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!(
        "q={} n={} k={} G=[{}]",
        m.field().order(),
        m.cols(),
        m.rows(),
        rows.join("; ")
    )
}

fn describe(m: &FieldMatrix, f: &HarmonicFunction) -> String {
    format!("{} f(d={})={}", describe_matrix(m), f.degree(), f)
}

/// Duality: the harmonic Tutte polynomial of the dual matroid equals
/// `(-1)^d` times the original with `x` and `y` swapped.
pub fn verify_duality(
    m: &VectorMatroid,
    f: &HarmonicFunction,
    caps: &EnumCaps,
) -> Result<VerificationReport> {
    let lhs = m.dual().harmonic_tutte_with(f, caps)?;
    let rhs = m
        .harmonic_tutte_with(f, caps)?
        .swap_xy()
        .scale(&sign(f.degree()));
    Ok(VerificationReport::compare(
        "duality",
        describe(m.representation(), f),
        lhs,
        rhs,
    ))
}

/// The Tutte side of the generalized Greene identity, computed termwise as
///
/// `(-1)^d * sum over J with d <= |J| <= n-d of
///   f~(J) * q^(k - rank(J)) * (x-y)^(|J| - d) * y^(n - d - |J|)`.
///
/// This is the substituted form
/// `(-1)^d (x-y)^(k-d) y^(n-k-d) T(M_C, f; (x+(q-1)y)/(x-y), x/y)`
/// with the rational functions cancelled before they are ever formed: the
/// corank-nullity term of a subset `J` contributes
/// `(X-1)^(k-rank(J)) (Y-1)^(|J|-rank(J))`, and at the substituted point
/// `X - 1 = qy/(x-y)`, `Y - 1 = (x-y)/y`, so multiplying through by the
/// prefactor `(x-y)^(k-d) y^(n-k-d)` leaves exactly
/// `q^(k-rank(J)) (x-y)^(|J|-d) y^(n-d-|J|)`, a polynomial on the whole
/// surviving size range. A numeric spot check of this cancellation against
/// direct rational-point evaluation lives in the integration tests.
pub fn greene_rhs(c: &LinearCode, f: &HarmonicFunction, caps: &EnumCaps) -> Result<BivariatePoly> {
    let n = c.length();
    let d = f.degree();
    if f.ground_size() != n {
        return Err(Error::GroundSizeMismatch {
            left: n,
            right: f.ground_size(),
        });
    }
    caps.check_ground(n)?;
    if n < 2 * d {
        return Ok(BivariatePoly::zero());
    }
    let q = c.field().order();
    let k = c.dimension();
    // group by subset size: the polynomial factor only depends on |J|
    let mut by_size = vec![Rational::zero(); n + 1];
    scan_weighted_subsets(c.generator(), f, &mut |size, rank, ext| {
        if !ext.is_zero() {
            by_size[size] += ext * rat_pow(q, k - rank);
        }
    });
    let mut total = BivariatePoly::zero();
    for (size, coeff) in by_size.iter().enumerate() {
        if !coeff.is_zero() {
            let c = sign(d) * coeff;
            total += &BivariatePoly::shifted_term(&c, size - d, n - d - size);
        }
    }
    Ok(total)
}

/// Generalized Greene: `zeta(C, f)` equals [`greene_rhs`].
pub fn verify_greene(
    c: &LinearCode,
    f: &HarmonicFunction,
    caps: &EnumCaps,
) -> Result<VerificationReport> {
    let lhs = c.zeta(f, caps)?;
    let rhs = greene_rhs(c, f, caps)?;
    Ok(VerificationReport::compare(
        "greene",
        describe(c.generator(), f),
        lhs,
        rhs,
    ))
}

/// Harmonic MacWilliams:
/// `zeta(C_dual, f) = (-1)^d (q^d / |C|) zeta(C, f)(x + (q-1)y, x - y)`.
///
/// The left side is computed by enumerating the dual code's words directly,
/// so the two routes share nothing past the null-space computation.
///
/// For `q = 2` this is the surd-free restatement of the classical form with
/// arguments `(x+y)/sqrt(2), (x-y)/sqrt(2)` and scale `2^(n/2)/|C|`: since
/// `zeta` is homogeneous of degree `n - 2d`, scaling both arguments by
/// `1/sqrt(2)` multiplies the value by `2^(-(n-2d)/2)`, and
/// `2^(n/2) * 2^(-(n-2d)/2) = 2^d`, which removes every surd. The verifier
/// asserts the homogeneity it relies on.
pub fn verify_macwilliams_harmonic(
    c: &LinearCode,
    f: &HarmonicFunction,
    caps: &EnumCaps,
) -> Result<VerificationReport> {
    let n = c.length();
    let d = f.degree();
    let q = c.field().order();
    let lhs = c.dual().zeta(f, caps)?;
    let z = c.zeta(f, caps)?;
    debug_assert!(z.is_homogeneous_of(n - 2 * d));
    let scale = sign(d) * rat_pow(q, d) / rat_pow(q, c.dimension());
    let q1 = Rational::from_integer((q - 1).into());
    let rhs = z.substitute_linear(
        &Rational::one(),
        &q1,
        &Rational::one(),
        &(-Rational::one()),
        &scale,
    );
    Ok(VerificationReport::compare(
        "macwilliams",
        describe(c.generator(), f),
        lhs,
        rhs,
    ))
}

/// The `B`/`A` relation: for `d <= t <= n-d`,
///
/// `B_{t,f} = (-1)^d * ( sum_{i=d}^{n-t} C(n-d-i, t-d) A_{i,f}
///                       - C(n-d, t-d) A_{0,f} )`,
///
/// and `B_{t,f} = 0` outside that band. The subtracted term removes the
/// zero codeword, which the `B`-side never counts; it vanishes identically
/// for `d >= 1`.
///
/// Both sides are packed into polynomials with the value at size `t` stored
/// as the coefficient of `x^t`.
pub fn verify_btf(
    c: &LinearCode,
    f: &HarmonicFunction,
    caps: &EnumCaps,
) -> Result<VerificationReport> {
    let n = c.length();
    let d = f.degree();
    let table = c.b_table(f, caps)?;
    let coeffs = c.harmonic_weight_coefficients(f, caps)?;

    let mut lhs = BivariatePoly::zero();
    for (t, v) in table.iter().enumerate() {
        lhs.add_term(v.clone(), t, 0);
    }

    let mut rhs = BivariatePoly::zero();
    for t in 0..=n {
        if t < d || t + d > n {
            continue; // must be zero there; lhs carries the actual values
        }
        let mut acc = Rational::zero();
        for i in d..=(n - t) {
            acc += binomial(n - d - i, t - d) * &coeffs[i];
        }
        acc -= binomial(n - d, t - d) * &coeffs[0];
        rhs.add_term(sign(d) * acc, t, 0);
    }

    Ok(VerificationReport::compare(
        "btf",
        format!(
            "{} (value at size t packed as coefficient of x^t)",
            describe(c.generator(), f)
        ),
        lhs,
        rhs,
    ))
}

/// Reinterpretation: `zeta` reassembled from the `B`-table equals `zeta`
/// computed from codewords.
pub fn verify_reinterpretation(
    c: &LinearCode,
    f: &HarmonicFunction,
    caps: &EnumCaps,
) -> Result<VerificationReport> {
    let lhs = c.zeta_from_b_table(f, caps)?;
    let rhs = c.zeta(f, caps)?;
    Ok(VerificationReport::compare(
        "reinterpretation",
        describe(c.generator(), f),
        lhs,
        rhs,
    ))
}

/// Sliced sums against the extension: for all `0 <= i <= d`,
/// `slice_sum(f, J, i) = (-1)^(d-i) C(d, i) f~(J)`.
///
/// The value at index `i` is packed as the coefficient of `x^i`.
pub fn verify_lemma_slices(f: &HarmonicFunction, j: &Subset) -> VerificationReport {
    let d = f.degree();
    let ext = f.extended(j);
    let mut lhs = BivariatePoly::zero();
    let mut rhs = BivariatePoly::zero();
    for i in 0..=d {
        lhs.add_term(f.slice_sum(j, i), i, 0);
        rhs.add_term(slice_factor(d, i) * &ext, i, 0);
    }
    VerificationReport::compare(
        "lemma-slices",
        format!(
            "n={} f(d={d})={f} J={j} (value at i packed as coefficient of x^i)",
            f.ground_size()
        ),
        lhs,
        rhs,
    )
}

/// [`verify_lemma_slices`] over every subset of the ground set.
pub fn verify_lemma_slices_all(f: &HarmonicFunction, caps: &EnumCaps) -> Result<Vec<VerificationReport>> {
    let n = f.ground_size();
    caps.check_ground(n)?;
    let mut reports = Vec::new();
    for mask in 0u64..(1u64 << n) {
        reports.push(verify_lemma_slices(f, &Subset::from_mask(mask)));
    }
    Ok(reports)
}

// ---------------------------------------------------------------------------
// design detection

/// Per-degree outcome of the harmonic design criterion.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub d: usize,
    pub basis_size: usize,
    /// Whether every harmonic weight enumerator of this degree vanishes.
    pub enumerators_all_zero: bool,
    /// Whether every harmonic Tutte polynomial of this degree vanishes
    /// (a matroid-level sufficient condition for the design property).
    pub tutte_all_zero: bool,
    /// A witness basis function and its nonzero enumerator, if any.
    pub witness: Option<DesignWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DesignWitness {
    pub function: String,
    pub enumerator: String,
}

/// Per-weight-class outcome of the counting oracle.
#[derive(Debug, Clone, Serialize)]
pub struct WeightClassReport {
    pub weight: usize,
    /// Codewords of this weight (blocks, counted with multiplicity).
    pub blocks: u64,
    /// Whether every `t`-subset of points lies in the same number of blocks.
    pub counts_constant: bool,
    /// That common count, when constant.
    pub lambda: Option<u64>,
}

/// Combined result of [`design_check`].
#[derive(Debug, Clone, Serialize)]
pub struct DesignCheckReport {
    pub t: usize,
    pub degrees: Vec<DegreeReport>,
    pub weight_classes: Vec<WeightClassReport>,
    /// All harmonic weight enumerators vanish for degrees `1..=t`.
    pub harmonic_pass: bool,
    /// All harmonic Tutte polynomials vanish for degrees `1..=t`.
    pub tutte_pass: bool,
    /// Every nonzero weight class has constant `t`-subset counts.
    pub oracle_pass: bool,
}

/// Tests whether the fixed-weight supports of `c` form `t`-designs, two
/// independent ways.
///
/// The harmonic criterion computes the harmonic weight enumerator of every
/// basis function of each degree `1..=t` and asks that all vanish. The
/// counting oracle takes, for each weight `w` with a nonzero word count,
/// the supports of the weight-`w` codewords as blocks and checks that every
/// `t`-subset of the ground set lies in a constant number of blocks. The
/// zero codeword is not a block.
///
/// For `q > 2` the blocks are counted with multiplicity (scalar multiples
/// of a word share its support).
pub fn design_check(c: &LinearCode, t: usize, caps: &EnumCaps) -> Result<DesignCheckReport> {
    let n = c.length();
    caps.check_ground(n)?;
    let matroid = c.matroid();

    let mut degrees = Vec::new();
    for d in 1..=t {
        let basis = harmonic_basis(n, d)?;
        let mut enumerators_all_zero = true;
        let mut tutte_all_zero = true;
        let mut witness = None;
        for f in &basis {
            let w = c.harmonic_weight_enumerator(f, caps)?;
            if !w.is_zero() {
                enumerators_all_zero = false;
                if witness.is_none() {
                    witness = Some(DesignWitness {
                        function: f.to_string(),
                        enumerator: w.to_string(),
                    });
                }
            }
            if !matroid.harmonic_tutte_with(f, caps)?.is_zero() {
                tutte_all_zero = false;
            }
        }
        degrees.push(DegreeReport {
            d,
            basis_size: basis.len(),
            enumerators_all_zero,
            tutte_all_zero,
            witness,
        });
    }

    // counting oracle: supports grouped by weight
    let mut supports_by_weight: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for word in c.codewords(caps)? {
        let weight = word.weight();
        if weight > 0 {
            supports_by_weight[weight].push(word.support().mask());
        }
    }
    let mut weight_classes = Vec::new();
    for (weight, blocks) in supports_by_weight.iter().enumerate() {
        if blocks.is_empty() {
            continue;
        }
        let mut counts_constant = true;
        let mut lambda = None;
        for t_subset in k_subsets(n, t)? {
            let tm = t_subset.mask();
            let count = blocks.iter().filter(|&&b| tm & !b == 0).count() as u64;
            match lambda {
                None => lambda = Some(count),
                Some(l) if l != count => {
                    counts_constant = false;
                    break;
                }
                Some(_) => {}
            }
        }
        weight_classes.push(WeightClassReport {
            weight,
            blocks: blocks.len() as u64,
            counts_constant,
            lambda: if counts_constant { lambda } else { None },
        });
    }

    Ok(DesignCheckReport {
        t,
        harmonic_pass: degrees.iter().all(|d| d.enumerators_all_zero),
        tutte_pass: degrees.iter().all(|d| d.tutte_all_zero),
        oracle_pass: weight_classes.iter().all(|w| w.counts_constant),
        degrees,
        weight_classes,
    })
}

// ---------------------------------------------------------------------------
// seeded random corpus

/// The identities covered by the corpus runner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Duality,
    Greene,
    MacWilliams,
    BTable,
    Reinterpretation,
    LemmaSlices,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Duality,
        Identity::Greene,
        Identity::MacWilliams,
        Identity::BTable,
        Identity::Reinterpretation,
        Identity::LemmaSlices,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Duality => "duality",
            Identity::Greene => "greene",
            Identity::MacWilliams => "macwilliams",
            Identity::BTable => "btf",
            Identity::Reinterpretation => "reinterpretation",
            Identity::LemmaSlices => "lemma-slices",
        }
    }
}

impl std::str::FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        match s {
            "duality" => Ok(Identity::Duality),
            "greene" => Ok(Identity::Greene),
            "macwilliams" => Ok(Identity::MacWilliams),
            "btf" => Ok(Identity::BTable),
            "reinterpretation" => Ok(Identity::Reinterpretation),
            "lemma-slices" => Ok(Identity::LemmaSlices),
            other => Err(Error::Parse(format!(
                "unknown identity {other:?}; expected one of duality, greene, \
                 macwilliams, btf, reinterpretation, lemma-slices, all"
            ))),
        }
    }
}

/// Shape of a random corpus run.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub seed: u64,
    /// Number of random instances. For [`Identity::LemmaSlices`] an
    /// instance is one `(f, J, i)` triple; otherwise it is one random
    /// matrix plus one degree, checked against every basis function of
    /// that degree.
    pub instances: usize,
    pub q_choices: Vec<u64>,
    pub max_n: usize,
    pub max_d: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 0,
            instances: 200,
            q_choices: vec![2, 3],
            max_n: 10,
            max_d: 3,
        }
    }
}

/// Result of running one identity over a corpus.
#[derive(Debug)]
pub struct CorpusOutcome {
    pub identity: Identity,
    pub instances: usize,
    pub checks: usize,
    pub failures: Vec<VerificationReport>,
}

impl CorpusOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Deterministic generator of random instances, with the harmonic bases
/// cached per `(n, d)` since they do not depend on the instance.
struct InstanceGen {
    rng: ChaCha8Rng,
    spec: CorpusSpec,
    basis_cache: HashMap<(usize, usize), Vec<HarmonicFunction>>,
}

impl InstanceGen {
    fn new(spec: &CorpusSpec) -> Self {
        InstanceGen {
            rng: ChaCha8Rng::seed_from_u64(spec.seed),
            spec: spec.clone(),
            basis_cache: HashMap::new(),
        }
    }

    fn random_matrix(&mut self) -> FieldMatrix {
        let q = self.spec.q_choices[self.rng.random_range(0..self.spec.q_choices.len())];
        let field = PrimeField::new(q).expect("corpus q must be prime");
        let n = self.rng.random_range(2..=self.spec.max_n);
        let k = self.rng.random_range(1..n.min(8));
        let entries: Vec<u64> = (0..k * n).map(|_| self.rng.random_range(0..q)).collect();
        FieldMatrix::new(field, k, n, entries).expect("entries are reduced")
    }

    fn random_degree(&mut self, n: usize) -> usize {
        self.rng.random_range(0..=self.spec.max_d.min(n / 2))
    }

    fn basis(&mut self, n: usize, d: usize) -> &[HarmonicFunction] {
        self.basis_cache
            .entry((n, d))
            .or_insert_with(|| harmonic_basis(n, d).expect("basis parameters in range"))
    }
}

/// Runs `spec.instances` random instances of one identity and collects any
/// failures. Exact comparisons throughout; an empty failure list means the
/// identity held on every generated instance.
pub fn run_corpus(identity: Identity, spec: &CorpusSpec) -> Result<CorpusOutcome> {
    let caps = EnumCaps::default();
    let mut generator = InstanceGen::new(spec);
    let mut checks = 0usize;
    let mut failures = Vec::new();

    for _ in 0..spec.instances {
        if identity == Identity::LemmaSlices {
            let n = generator.rng.random_range(2..=spec.max_n);
            let d = 1 + generator.rng.random_range(0..spec.max_d.min(n / 2).max(1));
            let basis = generator.basis(n, d).to_vec();
            if basis.is_empty() {
                continue;
            }
            let f = &basis[generator.rng.random_range(0..basis.len())];
            let j = Subset::from_mask(generator.rng.random_range(0..(1u64 << n)));
            let i = generator.rng.random_range(0..=d);
            // one slice index per triple: compare just that coefficient
            let report = verify_lemma_slices(f, &j);
            let lhs = report.lhs.coeff(i, 0);
            let rhs = report.rhs.coeff(i, 0);
            checks += 1;
            if lhs != rhs {
                failures.push(report);
            }
            continue;
        }

        let matrix = generator.random_matrix();
        let n = matrix.cols();
        let d = generator.random_degree(n);
        let basis = generator.basis(n, d).to_vec();
        let code = LinearCode::from_matrix(matrix);
        // the reduced generator represents the same matroid and is full
        // row rank
        let matroid = VectorMatroid::new(code.generator().clone());
        for f in &basis {
            let report = match identity {
                Identity::Duality => verify_duality(&matroid, f, &caps)?,
                Identity::Greene => verify_greene(&code, f, &caps)?,
                Identity::MacWilliams => verify_macwilliams_harmonic(&code, f, &caps)?,
                Identity::BTable => verify_btf(&code, f, &caps)?,
                Identity::Reinterpretation => verify_reinterpretation(&code, f, &caps)?,
                Identity::LemmaSlices => unreachable!(),
            };
            checks += 1;
            if !report.is_equal() {
                failures.push(report);
            }
        }
    }

    Ok(CorpusOutcome {
        identity,
        instances: spec.instances,
        checks,
        failures,
    })
}

/// Outcome of the full self-test: every identity over its own seeded corpus.
#[derive(Debug)]
pub struct SelfTestReport {
    pub seed: u64,
    pub outcomes: Vec<CorpusOutcome>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CorpusOutcome::passed)
    }
}

/// Runs the seeded random corpus for every identity.
pub fn selftest(seed: u64, instances: usize) -> Result<SelfTestReport> {
    let mut outcomes = Vec::new();
    for identity in Identity::ALL {
        let spec = CorpusSpec {
            seed,
            instances: if identity == Identity::LemmaSlices {
                // triples are much cheaper than full polynomial identities
                instances * 5
            } else {
                instances
            },
            ..CorpusSpec::default()
        };
        outcomes.push(run_corpus(identity, &spec)?);
    }
    Ok(SelfTestReport { seed, outcomes })
}

/// A quick deterministic smoke pass used by tests that need "some random
/// codes" without pulling in the full corpus machinery.
pub fn sample_codes(seed: u64, count: usize, q_choices: &[u64], max_n: usize) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let q = q_choices[rng.random_range(0..q_choices.len())];
        let field = PrimeField::new(q).expect("q must be prime");
        let n = rng.random_range(2..=max_n);
        let k = rng.random_range(1..n.min(8));
        let entries: Vec<u64> = (0..k * n).map(|_| rng.random_range(0..q)).collect();
        out.push(LinearCode::from_matrix(
            FieldMatrix::new(field, k, n, entries).expect("entries are reduced"),
        ));
    }
    out
}
