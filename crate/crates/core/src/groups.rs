//! Enumeration of the signed permutation group and its even-sign subgroup,
//! and the claim registry behind `sbrauer verify`.
//!
//! Elements are indexed by a rank in `0..2^n * n!`: the high part is the
//! sign mask (bit `i - 1` set when strand `i` is negative) and the low part
//! is the lexicographic rank of the underlying permutation. Any rank range
//! can therefore be checked independently, which is how `--jobs` splits work.

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::bsgs::{self, Bsgs, GeneratorSet};
use crate::diagram::EdgeSign;
use crate::hyperoct::SignedPermutation;
use crate::perm::Permutation;
use crate::{Error, Result};

/// Largest `n` enumerated exhaustively unless overridden.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 7;

/// Sample count used when `n` is above the exhaustive cap.
pub const DEFAULT_SAMPLES: u64 = 100_000;

const CHUNK: u128 = 4096;

pub fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// `2^n * n!`.
pub fn group_order(n: usize) -> Option<u128> {
    factorial(n)?.checked_mul(1u128.checked_shl(n as u32)?)
}

/// `2^(n-1) * n!`.
pub fn even_order(n: usize) -> Option<u128> {
    group_order(n).map(|o| o / 2)
}

/// Lexicographic rank of a permutation among all permutations of its degree.
pub fn permutation_rank(p: &Permutation) -> u128 {
    let n = p.degree();
    let images = p.images();
    let mut rank = 0u128;
    for i in 0..n {
        let smaller_later = images[i + 1..].iter().filter(|&&v| v < images[i]).count();
        rank = rank * (n - i) as u128 + smaller_later as u128;
    }
    rank
}

/// Inverse of [`permutation_rank`]. `rank` must be below `n!`.
pub fn permutation_unrank(n: usize, mut rank: u128) -> Permutation {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = (n - i) as u128;
        digits[i] = (rank % base) as usize;
        rank /= base;
    }
    let mut available: Vec<usize> = (1..=n).collect();
    let images = digits.into_iter().map(|d| available.remove(d)).collect();
    Permutation::from_images_unchecked(images)
}

pub fn element_rank(s: &SignedPermutation) -> u128 {
    let n = s.n();
    let mask = s
        .signs()
        .iter()
        .enumerate()
        .filter(|(_, sign)| sign.is_negative())
        .fold(0u128, |m, (i, _)| m | (1 << i));
    mask * factorial(n).expect("rank overflow") + permutation_rank(s.underlying())
}

/// The element with the given rank. `rank` must be below `2^n * n!`.
pub fn element_at(n: usize, rank: u128) -> SignedPermutation {
    let fact = factorial(n).expect("rank overflow");
    let mask = rank / fact;
    let signs = (0..n)
        .map(|i| {
            if mask >> i & 1 == 1 {
                EdgeSign::Negative
            } else {
                EdgeSign::Positive
            }
        })
        .collect();
    SignedPermutation::new(permutation_unrank(n, rank % fact), signs)
        .expect("degrees agree by construction")
}

/// Deterministic stream over the whole group or its even-sign subgroup.
#[derive(Debug, Clone)]
pub struct ElementStream {
    n: usize,
    even_only: bool,
    fact: u128,
    next: u128,
    end: u128,
}

impl ElementStream {
    fn new(n: usize, even_only: bool, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        if n > cap {
            return Err(Error::OverCap { n, cap });
        }
        let end = group_order(n).ok_or(Error::Overflow("group order"))?;
        let fact = factorial(n).ok_or(Error::Overflow("factorial"))?;
        Ok(ElementStream {
            n,
            even_only,
            fact,
            next: 0,
            end,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Yields elements together with their rank in the full group.
    pub fn ranked(self) -> impl Iterator<Item = (u128, SignedPermutation)> {
        let mut stream = self;
        std::iter::from_fn(move || stream.next_ranked())
    }

    fn next_ranked(&mut self) -> Option<(u128, SignedPermutation)> {
        while self.next < self.end {
            let mask = self.next / self.fact;
            if self.even_only && mask.count_ones() % 2 == 1 {
                self.next = (mask + 1) * self.fact;
                continue;
            }
            let rank = self.next;
            self.next += 1;
            return Some((rank, element_at(self.n, rank)));
        }
        None
    }

    fn remaining(&self) -> u128 {
        if !self.even_only {
            return self.end - self.next;
        }
        let mut total = 0;
        let mut pos = self.next;
        while pos < self.end {
            let mask = pos / self.fact;
            let block_end = (mask + 1) * self.fact;
            if mask.count_ones().is_multiple_of(2) {
                total += block_end - pos;
            }
            pos = block_end;
        }
        total
    }
}

impl Iterator for ElementStream {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        self.next_ranked().map(|(_, s)| s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.remaining()).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}

impl ExactSizeIterator for ElementStream {}

pub fn enumerate_signed(n: usize) -> Result<ElementStream> {
    enumerate_signed_with_cap(n, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn enumerate_signed_with_cap(n: usize, cap: usize) -> Result<ElementStream> {
    ElementStream::new(n, false, cap)
}

pub fn enumerate_even(n: usize) -> Result<ElementStream> {
    enumerate_even_with_cap(n, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn enumerate_even_with_cap(n: usize, cap: usize) -> Result<ElementStream> {
    ElementStream::new(n, true, cap)
}

/// `C(n,0) + C(n,2) + C(n,4) + ...`, summed from Pascal's triangle.
pub fn even_binomial_count(n: usize) -> Result<u128> {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1]
                .checked_add(row[k])
                .ok_or(Error::Overflow("binomial coefficient"))?;
        }
        row = next;
    }
    row.iter()
        .step_by(2)
        .try_fold(0u128, |acc, &c| acc.checked_add(c))
        .ok_or(Error::Overflow("binomial sum"))
}

/// Cycle lengths in weakly decreasing order, fixed points included as 1s.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Each part repeated twice.
    pub fn doubled(&self) -> CycleType {
        CycleType(self.0.iter().flat_map(|&p| [p, p]).collect())
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    let decomposition = p.cycles();
    let mut parts: Vec<usize> = decomposition.cycles().iter().map(Vec::len).collect();
    parts.extend(std::iter::repeat_n(1, decomposition.fixed_point_count()));
    parts.sort_unstable_by(|a, b| b.cmp(a));
    CycleType(parts)
}

/// Checkable results, one per statement about the group or the embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// All-positive elements embed as even permutations with doubled cycle type.
    Lem21,
    /// All-negative elements embed with every cycle of even length.
    Lem23,
    /// All-negative elements embed with a cycle count congruent to `n` mod 2.
    Lem26,
    /// All-negative elements: cycles alternate between the two halves.
    Cor27,
    /// All-negative elements with `n` even never embed as a `2n`-cycle.
    Cor28,
    /// All-negative elements with `n` even embed as even permutations.
    Prop29,
    /// Even embedding iff even number of negative strands.
    Thm31,
    /// The even-sign subgroup has order `2^(n-1) n!`.
    Thm32Order,
    /// The even-sign subgroup is exactly the preimage of `A_2n`.
    Thm32Intersection,
    /// The even-sign subgroup is a normal subgroup of index 2.
    Thm32Normal,
    /// `nu2(n (n-1) ... (floor(n/2)+1)) = floor(n/2)` up to `n`.
    Cor34,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::Lem21,
        Claim::Lem23,
        Claim::Lem26,
        Claim::Cor27,
        Claim::Cor28,
        Claim::Prop29,
        Claim::Thm31,
        Claim::Thm32Order,
        Claim::Thm32Intersection,
        Claim::Thm32Normal,
        Claim::Cor34,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Lem21 => "lem_2_1",
            Claim::Lem23 => "lem_2_3",
            Claim::Lem26 => "lem_2_6",
            Claim::Cor27 => "cor_2_7",
            Claim::Cor28 => "cor_2_8",
            Claim::Prop29 => "prop_2_9",
            Claim::Thm31 => "thm_3_1",
            Claim::Thm32Order => "thm_3_2_order",
            Claim::Thm32Intersection => "thm_3_2_intersection",
            Claim::Thm32Normal => "thm_3_2_normal",
            Claim::Cor34 => "cor_3_4",
        }
    }

    fn domain(self) -> Option<Domain> {
        match self {
            Claim::Lem21 => Some(Domain::AllPositive),
            Claim::Lem23 | Claim::Lem26 | Claim::Cor27 | Claim::Cor28 | Claim::Prop29 => {
                Some(Domain::AllNegative)
            }
            Claim::Thm31 | Claim::Thm32Intersection => Some(Domain::Full),
            Claim::Thm32Order | Claim::Thm32Normal | Claim::Cor34 => None,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Domain {
    AllPositive,
    AllNegative,
    Full,
}

impl Domain {
    fn ranks(self, n: usize) -> Range<u128> {
        let fact = factorial(n).expect("checked by caller");
        let masks = 1u128 << n;
        match self {
            Domain::AllPositive => 0..fact,
            Domain::AllNegative => (masks - 1) * fact..masks * fact,
            Domain::Full => 0..masks * fact,
        }
    }

    fn sample(self, n: usize, rng: &mut ChaCha8Rng) -> SignedPermutation {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        let signs = (0..n)
            .map(|_| match self {
                Domain::AllPositive => EdgeSign::Positive,
                Domain::AllNegative => EdgeSign::Negative,
                Domain::Full => {
                    if rng.gen::<bool>() {
                        EdgeSign::Negative
                    } else {
                        EdgeSign::Positive
                    }
                }
            })
            .collect();
        SignedPermutation::new(Permutation::from_images_unchecked(images), signs)
            .expect("degrees agree by construction")
    }
}

/// Which independent check backs the group-membership claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Oracle {
    #[default]
    Enumeration,
    Bsgs,
}

impl FromStr for Oracle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumeration" => Ok(Oracle::Enumeration),
            "bsgs" => Ok(Oracle::Bsgs),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub cap: usize,
    pub jobs: usize,
    pub samples: u64,
    pub seed: u64,
    pub oracle: Oracle,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cap: DEFAULT_EXHAUSTIVE_CAP,
            jobs: 1,
            samples: DEFAULT_SAMPLES,
            seed: 0x5eed,
            oracle: Oracle::Enumeration,
        }
    }
}

/// A failing instance. `element` replays it when the claim is about a
/// single group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub rank: Option<u128>,
    pub element: Option<SignedPermutation>,
    pub detail: String,
}

impl Counterexample {
    fn element(s: &SignedPermutation, detail: String) -> Self {
        Counterexample {
            rank: Some(element_rank(s)),
            element: Some(s.clone()),
            detail,
        }
    }

    fn global(detail: String) -> Self {
        Counterexample {
            rank: None,
            element: None,
            detail,
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.element {
            Some(s) => write!(f, "{s}"),
            None => write!(f, "# {}", self.detail),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub claim: String,
    pub n: usize,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub duration: Duration,
    pub mode: Mode,
    /// Measured quantities, e.g. `order=24`.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(claim: impl Into<String>, n: usize) -> Self {
        VerificationReport {
            claim: claim.into(),
            n,
            checked: 0,
            counterexamples: Vec::new(),
            duration: Duration::ZERO,
            mode: Mode::Exhaustive,
            notes: Vec::new(),
        }
    }

    pub fn failures(&self) -> usize {
        self.counterexamples.len()
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// `claim=<id> n=<n> checked=<count> failures=<count>`
    pub fn summary_line(&self) -> String {
        format!(
            "claim={} n={} checked={} failures={}",
            self.claim,
            self.n,
            self.checked,
            self.failures()
        )
    }

    fn absorb(&mut self, checked: u64, mut found: Vec<Counterexample>) {
        self.checked += checked;
        self.counterexamples.append(&mut found);
    }

    fn sort_counterexamples(&mut self) {
        self.counterexamples
            .sort_by(|a, b| a.rank.cmp(&b.rank).then_with(|| a.detail.cmp(&b.detail)));
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary_line())?;
        for c in &self.counterexamples {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Runs `work` over `chunks` chunk indices on `jobs` threads and merges.
fn run_chunks<F>(chunks: u64, jobs: usize, work: F) -> (u64, Vec<Counterexample>)
where
    F: Fn(u64) -> (u64, Vec<Counterexample>) + Sync,
{
    let next = AtomicU64::new(0);
    let merged = Mutex::new((0u64, Vec::new()));
    let worker = || loop {
        let chunk = next.fetch_add(1, Ordering::Relaxed);
        if chunk >= chunks {
            break;
        }
        let (checked, mut found) = work(chunk);
        let mut guard = merged.lock().expect("worker panicked");
        guard.0 += checked;
        guard.1.append(&mut found);
    };
    let jobs = jobs.clamp(1, chunks.max(1) as usize);
    if jobs == 1 {
        worker();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(worker);
            }
        });
    }
    merged.into_inner().expect("worker panicked")
}

/// Checks `check` on every rank in `ranks`.
fn scan_ranks<F>(n: usize, ranks: Range<u128>, jobs: usize, check: F) -> (u64, Vec<Counterexample>)
where
    F: Fn(&SignedPermutation) -> Option<String> + Sync,
{
    let total = ranks.end - ranks.start;
    let chunks = total.div_ceil(CHUNK) as u64;
    run_chunks(chunks, jobs, |chunk| {
        let lo = ranks.start + chunk as u128 * CHUNK;
        let hi = (lo + CHUNK).min(ranks.end);
        let found = (lo..hi)
            .filter_map(|rank| {
                let s = element_at(n, rank);
                check(&s).map(|detail| Counterexample {
                    rank: Some(rank),
                    element: Some(s),
                    detail,
                })
            })
            .collect();
        ((hi - lo) as u64, found)
    })
}

/// Checks `check` on `samples` random elements. Chunk `c` draws from a
/// generator seeded with `seed + c`, so results do not depend on `jobs`.
fn scan_samples<G, F>(samples: u64, seed: u64, jobs: usize, draw: G, check: F) -> (u64, Vec<Counterexample>)
where
    G: Fn(&mut ChaCha8Rng) -> SignedPermutation + Sync,
    F: Fn(&SignedPermutation) -> Option<String> + Sync,
{
    let chunk_size = CHUNK as u64;
    let chunks = samples.div_ceil(chunk_size);
    run_chunks(chunks, jobs, |chunk| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(chunk));
        let count = chunk_size.min(samples - chunk * chunk_size);
        let found = (0..count)
            .filter_map(|_| {
                let s = draw(&mut rng);
                check(&s).map(|detail| Counterexample::element(&s, detail))
            })
            .collect();
        (count, found)
    })
}

fn check_element(claim: Claim, s: &SignedPermutation, even_group: Option<&Bsgs>) -> Option<String> {
    let n = s.n();
    let image = s.embed();
    match claim {
        Claim::Lem21 => {
            if !image.parity().is_even() {
                return Some(format!("{image} is odd"));
            }
            let expected = cycle_type(s.underlying()).doubled();
            let actual = cycle_type(&image);
            (expected != actual).then(|| format!("cycle type {actual}, expected {expected}"))
        }
        Claim::Lem23 => {
            let t = cycle_type(&image);
            t.parts()
                .iter()
                .any(|p| p % 2 == 1)
                .then(|| format!("{image} has an odd cycle, type {t}"))
        }
        Claim::Lem26 => {
            let count = image.cycles().cycles().len();
            let fixed = image.cycles().fixed_point_count();
            if fixed > 0 {
                Some(format!("{image} fixes {fixed} points"))
            } else {
                (count % 2 != n % 2).then(|| format!("{image} has {count} cycles, n = {n}"))
            }
        }
        Claim::Cor27 => {
            let half = |p: usize| p <= n;
            image.cycles().cycles().iter().find_map(|cycle| {
                let k = cycle.len();
                (0..k)
                    .any(|j| half(cycle[j]) == half(cycle[(j + 1) % k]))
                    .then(|| format!("cycle of {image} stays on one side"))
            })
        }
        Claim::Cor28 => {
            let is_full_cycle = cycle_type(&image).parts() == [2 * n];
            (n.is_multiple_of(2) && is_full_cycle).then(|| format!("{image} is a {}-cycle", 2 * n))
        }
        Claim::Prop29 => (n.is_multiple_of(2) && !image.parity().is_even()).then(|| format!("{image} is odd")),
        Claim::Thm31 | Claim::Thm32Intersection => {
            let even_signs = s.neg_count().is_multiple_of(2);
            let even_image = image.parity().is_even();
            if even_signs != even_image {
                return Some(format!(
                    "{} negative strands but embedding is {}",
                    s.neg_count(),
                    image.parity()
                ));
            }
            let group = even_group?;
            (group.contains(&image).ok()? != even_signs)
                .then(|| format!("Schreier-Sims membership disagrees for {image}"))
        }
        Claim::Thm32Order | Claim::Thm32Normal | Claim::Cor34 => None,
    }
}

/// Checks one claim for one `n`.
///
/// Element claims run over their whole domain when `n <= opts.cap` and over
/// `opts.samples` uniform random elements otherwise.
pub fn verify(claim: Claim, n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = match claim {
        Claim::Cor34 => arith::verify_corollary(n as u64, arith::DEFAULT_EXACT_LIMIT)?,
        Claim::Thm32Normal => verify_group_structure(n, opts)?,
        Claim::Thm32Order => verify_order(n, opts)?,
        _ => verify_elements(claim, n, opts)?,
    };
    report.claim = claim.id().to_string();
    report.sort_counterexamples();
    report.duration = start.elapsed();
    Ok(report)
}

pub fn verify_all(n: usize, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    Claim::ALL.into_iter().map(|c| verify(c, n, opts)).collect()
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall { n, min });
    }
    group_order(n).ok_or(Error::Overflow("group order"))?;
    Ok(())
}

fn verify_elements(claim: Claim, n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_n(n, 1)?;
    let domain = claim.domain().expect("element claim");
    let even_group = match (opts.oracle, claim) {
        (Oracle::Bsgs, Claim::Thm31 | Claim::Thm32Intersection) if n >= 2 => {
            Some(bsgs::embedded_generated(n, GeneratorSet::Even)?)
        }
        _ => None,
    };
    let check = |s: &SignedPermutation| check_element(claim, s, even_group.as_ref());

    let mut report = VerificationReport::new(claim.id(), n);
    if n <= opts.cap {
        let (checked, found) = scan_ranks(n, domain.ranks(n), opts.jobs, check);
        report.absorb(checked, found);
    } else {
        report.mode = Mode::Sampled;
        let (checked, found) = scan_samples(opts.samples, opts.seed, opts.jobs, |rng| domain.sample(n, rng), check);
        report.absorb(checked, found);
    }

    if claim == Claim::Thm32Intersection && report.mode == Mode::Exhaustive {
        let even = enumerate_even_with_cap(n, opts.cap)?.len() as u128;
        let expected = even_order(n).expect("checked above");
        report.notes.push(format!("order={even}"));
        if even != expected {
            report
                .counterexamples
                .push(Counterexample::global(format!("|intersection| = {even}, expected {expected}")));
        }
    }
    Ok(report)
}

fn verify_order(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_n(n, 1)?;
    let mut report = VerificationReport::new(Claim::Thm32Order.id(), n);
    let expected = even_order(n).expect("checked above");
    let fact = factorial(n).expect("checked above");
    let binomial = even_binomial_count(n)?;
    if binomial.checked_mul(fact) != Some(expected) {
        report.counterexamples.push(Counterexample::global(format!(
            "even binomial sum {binomial} times {n}! differs from {expected}"
        )));
    }

    if opts.oracle == Oracle::Enumeration && n <= opts.cap {
        // distinct images of the even-sign elements
        let mut images = HashSet::new();
        for s in enumerate_signed_with_cap(n, opts.cap)? {
            report.checked += 1;
            if in_even_subgroup(&s) {
                images.insert(s.embed());
            }
        }
        let count = images.len() as u128;
        report.notes.push(format!("order={count}"));
        report.notes.push("oracle=enumeration".into());
        if count != expected {
            report
                .counterexamples
                .push(Counterexample::global(format!("counted {count} elements, expected {expected}")));
        }
        return Ok(report);
    }

    // Schreier-Sims does not need enumeration
    if n < 2 {
        report.checked += 1;
        report.notes.push("order=1".into());
        if expected != 1 {
            report.counterexamples.push(Counterexample::global(format!("expected order {expected}")));
        }
        return Ok(report);
    }
    let group = bsgs::embedded_generated(n, GeneratorSet::Even)?;
    let order = group.order();
    report.checked += 1;
    report.notes.push(format!("order={order}"));
    report.notes.push("oracle=bsgs".into());
    if order != expected {
        report
            .counterexamples
            .push(Counterexample::global(format!("Schreier-Sims order {order}, expected {expected}")));
    }
    if n <= opts.cap {
        let (checked, found) = scan_ranks(n, Domain::Full.ranks(n), opts.jobs, |s| {
            let member = group.contains(&s.embed()).expect("degrees agree");
            (member != (s.neg_count() % 2 == 0)).then(|| "Schreier-Sims membership disagrees".to_string())
        });
        report.absorb(checked, found);
    }
    Ok(report)
}

fn in_even_subgroup(s: &SignedPermutation) -> bool {
    s.neg_count().is_multiple_of(2)
}

/// Largest `|S| * |A|` for which normality is checked on every pair.
const EXHAUSTIVE_PAIR_LIMIT: u128 = 1_000_000;

/// Closure, inverses, index 2 and normality of the even-sign subgroup,
/// each checked on elements directly rather than inferred from the index.
pub fn verify_group_structure(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_n(n, 1)?;
    let mut report = VerificationReport::new(Claim::Thm32Normal.id(), n);
    let full = group_order(n).expect("checked above");
    let even = full / 2;
    let exhaustive = n <= opts.cap && full.checked_mul(even).is_some_and(|p| p <= EXHAUSTIVE_PAIR_LIMIT);

    if exhaustive {
        let all: Vec<SignedPermutation> = enumerate_signed_with_cap(n, opts.cap)?.collect();
        let subgroup: Vec<&SignedPermutation> = all.iter().filter(|s| in_even_subgroup(s)).collect();

        let index = all.len() / subgroup.len().max(1);
        report.notes.push(format!("order={}", subgroup.len()));
        report.notes.push(format!("index={index}"));
        if subgroup.len() as u128 != even || all.len() != 2 * subgroup.len() {
            report.counterexamples.push(Counterexample::global(format!(
                "subgroup order {} in group of order {}",
                subgroup.len(),
                all.len()
            )));
        }

        let (checked, found) = run_chunks(subgroup.len() as u64, opts.jobs, |i| {
            let a = subgroup[i as usize];
            let mut found = Vec::new();
            let mut checked = 1;
            if !in_even_subgroup(&a.inverse()) {
                found.push(Counterexample::element(a, "inverse leaves the subgroup".into()));
            }
            for b in &subgroup {
                checked += 1;
                let ab = a.mul(b).expect("same n");
                if !in_even_subgroup(&ab) {
                    found.push(Counterexample::element(a, format!("product with {b} leaves the subgroup")));
                }
            }
            for g in &all {
                checked += 1;
                if !in_even_subgroup(&a.conjugate_by(g).expect("same n")) {
                    found.push(Counterexample::element(a, format!("conjugate by {g} leaves the subgroup")));
                }
            }
            (checked, found)
        });
        report.absorb(checked, found);
    } else {
        report.mode = Mode::Sampled;
        let draw_even = |rng: &mut ChaCha8Rng| loop {
            let s = Domain::Full.sample(n, rng);
            if in_even_subgroup(&s) {
                break s;
            }
        };
        let (checked, found) = scan_samples(opts.samples, opts.seed, opts.jobs, draw_even, |a| {
            // derive g and b from a second stream keyed by a's rank
            let mut rng = ChaCha8Rng::seed_from_u64(element_rank(a) as u64 ^ opts.seed);
            let g = Domain::Full.sample(n, &mut rng);
            let b = draw_even(&mut rng);
            if !in_even_subgroup(&a.inverse()) {
                return Some("inverse leaves the subgroup".into());
            }
            if !in_even_subgroup(&a.mul(&b).expect("same n")) {
                return Some(format!("product with {b} leaves the subgroup"));
            }
            (!in_even_subgroup(&a.conjugate_by(&g).expect("same n")))
                .then(|| format!("conjugate by {g} leaves the subgroup"))
        });
        report.absorb(checked, found);
        report.notes.push(format!("order={even}"));
        report.notes.push("index=2".into());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_round_trip() {
        for n in 1..=4 {
            for rank in 0..group_order(n).unwrap() {
                assert_eq!(element_rank(&element_at(n, rank)), rank);
            }
        }
    }

    #[test]
    fn unrank_is_lexicographic() {
        let perms: Vec<Vec<usize>> = (0..6).map(|r| permutation_unrank(3, r).images().to_vec()).collect();
        assert_eq!(
            perms,
            vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 1, 3], vec![2, 3, 1], vec![3, 1, 2], vec![3, 2, 1]]
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_signed(1).unwrap().count(), 2);
        assert_eq!(enumerate_signed(2).unwrap().count(), 8);
        assert_eq!(enumerate_signed(3).unwrap().count(), 48);
        assert_eq!(enumerate_even(1).unwrap().count(), 1);
        assert_eq!(enumerate_even(3).unwrap().len(), 24);
        assert_eq!(enumerate_even(4).unwrap().count(), 192);
    }

    #[test]
    fn enumeration_respects_cap() {
        assert_eq!(enumerate_signed(8).unwrap_err(), Error::OverCap { n: 8, cap: 7 });
        assert!(enumerate_signed_with_cap(8, 8).is_ok());
        assert_eq!(enumerate_even(0).unwrap_err(), Error::TooSmall { n: 0, min: 1 });
    }

    #[test]
    fn enumeration_order_starts_with_identity() {
        let first: Vec<String> = enumerate_signed(2).unwrap().take(3).map(|s| s.to_string()).collect();
        assert_eq!(first, vec!["+1 +2", "+2 +1", "-1 +2"]);
    }

    #[test]
    fn even_binomial_examples() {
        assert_eq!(even_binomial_count(2).unwrap(), 2);
        assert_eq!(even_binomial_count(5).unwrap(), 16);
        assert_eq!(even_binomial_count(10).unwrap(), 512);
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(cycle_type(&Permutation::identity(4)).parts(), &[1, 1, 1, 1]);
        let p = Permutation::parse_cycles("(1 7 3 9)(6 2 8 4)(5 10)", 10).unwrap();
        assert_eq!(cycle_type(&p).parts(), &[4, 4, 2]);
        let p = Permutation::parse_cycles("(1 8 4 9)(7 2 10 3)(5 12)(6 11)", 12).unwrap();
        assert_eq!(cycle_type(&p).parts(), &[4, 4, 2, 2]);
        assert_eq!(cycle_type(&p).to_string(), "(4,4,2,2)");
    }

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert_eq!("lem_9_9".parse::<Claim>().unwrap_err(), Error::UnknownClaim("lem_9_9".into()));
    }

    #[test]
    fn verify_examples() {
        let opts = VerifyOptions::default();
        let r = verify(Claim::Thm31, 4, &opts).unwrap();
        assert_eq!((r.checked, r.failures()), (384, 0));
        assert_eq!(r.summary_line(), "claim=thm_3_1 n=4 checked=384 failures=0");

        let r = verify(Claim::Lem23, 5, &opts).unwrap();
        assert_eq!((r.checked, r.failures()), (120, 0));

        let r = verify(Claim::Thm32Intersection, 3, &opts).unwrap();
        assert!(r.passed());
        assert!(r.notes.contains(&"order=24".to_string()));
    }

    #[test]
    fn group_structure_examples() {
        let opts = VerifyOptions::default();
        for (n, order) in [(2, "order=4"), (3, "order=24"), (4, "order=192")] {
            let r = verify_group_structure(n, &opts).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.notes.contains(&order.to_string()));
        }
        let r = verify_group_structure(3, &opts).unwrap();
        assert_eq!(r.mode, Mode::Exhaustive);
        assert!(r.notes.contains(&"index=2".to_string()));
        let r = verify_group_structure(5, &VerifyOptions { samples: 2000, ..Default::default() }).unwrap();
        assert_eq!(r.mode, Mode::Sampled);
        assert_eq!(r.checked, 2000);
        assert!(r.passed());
    }

    #[test]
    fn jobs_do_not_change_results() {
        let one = verify(Claim::Thm31, 5, &VerifyOptions::default()).unwrap();
        let four = verify(Claim::Thm31, 5, &VerifyOptions { jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(one.summary_line(), four.summary_line());
    }

    #[test]
    fn sampled_beyond_cap() {
        let opts = VerifyOptions {
            samples: 5000,
            ..Default::default()
        };
        let r = verify(Claim::Thm31, 12, &opts).unwrap();
        assert_eq!(r.mode, Mode::Sampled);
        assert_eq!(r.checked, 5000);
        assert!(r.passed());
    }

    #[test]
    fn detects_a_broken_predicate() {
        // element checks must actually reject: an odd image violates lem_2_1
        let s: SignedPermutation = "-1 +2".parse().unwrap();
        assert!(check_element(Claim::Lem21, &s, None).is_some());
        assert!(check_element(Claim::Prop29, &"-1 -2".parse().unwrap(), None).is_none());
        let odd_neg: SignedPermutation = "-1 +2 +3".parse().unwrap();
        assert!(check_element(Claim::Lem23, &odd_neg, None).is_some());
    }

    #[test]
    fn report_formats_counterexamples() {
        let mut r = VerificationReport::new("thm_3_1", 2);
        r.checked = 8;
        let s: SignedPermutation = "-2 +1".parse().unwrap();
        r.counterexamples.push(Counterexample::element(&s, "made up".into()));
        r.counterexamples.push(Counterexample::global("count".into()));
        assert_eq!(r.to_string(), "claim=thm_3_1 n=2 checked=8 failures=2\n-2 +1\n# count\n");
    }
}
