//! The experiments behind the CLI subcommands.
//!
//! Every subcommand is a thin wrapper over a library function here, so
//! the integration and acceptance suites can drive the same code paths
//! without spawning processes. All randomness flows through the seeded
//! generator in [`crate::rng`], and no output contains timestamps, so a
//! command line plus a seed reproduces its CSV byte for byte.

use std::fs::File;
use std::io;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use num_traits::Signed;
use sqfbox_core::discriminant::{
    char2_root_monomial, sparse_monomial, squares_monomial, symbolic_discriminant,
    trinomial_identity,
};
use sqfbox_core::nullstellensatz::{search_squarefree, CoeffBox, GuaranteeKind, SearchOutcome};
use sqfbox_core::{BigInt, Error, Field, FieldElement, UniPoly};

use crate::rng::Xoshiro256;

/// Most polynomial tuples any single enumeration command may touch.
pub const ENUMERATION_CAP: u128 = 100_000_000;

/// Most boxes an exhaustive theorem check may visit; larger families
/// must be sampled.
pub const EXHAUSTIVE_BOX_CAP: u128 = 1_000_000;

/// Errors from the experiment layer, each mapped to an exit code:
/// assertion failures exit 1, everything else (usage, budgets, I/O,
/// algebra-layer rejections) exits 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cube size {c} exceeds the field order {q}")]
    CTooLarge { c: u64, q: u64 },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("assertion failed: {0}")]
    AssertionFailed(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// Process exit code: 0 is success, 1 a failed assertion, 2 anything
    /// that prevented the experiment from running at all.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::AssertionFailed(_) => 1,
            _ => 2,
        }
    }
}

/// Builds a CSV writer for `out`: a file when a path is given, stdout
/// otherwise. Summary lines go to the channel the CSV does not occupy.
fn csv_writer(out: Option<&Path>) -> Result<csv::Writer<Box<dyn io::Write>>, CliError> {
    let sink: Box<dyn io::Write> = match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    Ok(csv::Writer::from_writer(sink))
}

/// Prints a human summary without disturbing CSV going to stdout.
fn emit_summary(out: Option<&Path>, line: &str) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

/// Renders `num/den` with six decimals, rounding half up.
pub fn decimal6(num: u64, den: u64) -> String {
    assert!(den > 0, "zero denominator");
    let scaled = num as u128 * 1_000_000;
    let mut q = scaled / den as u128;
    if 2 * (scaled % den as u128) >= den as u128 {
        q += 1;
    }
    format!("{}.{:06}", q / 1_000_000, q % 1_000_000)
}

/// Binomial coefficient, `None` on overflow.
fn binomial(q: u64, m: usize) -> Option<u128> {
    if m as u64 > q {
        return Some(0);
    }
    let mut acc: u128 = 1;
    for i in 0..m as u128 {
        // Multiply before dividing: every prefix product of consecutive
        // integers is divisible by the factorial accumulated so far.
        acc = acc.checked_mul(q as u128 - i)? / (i + 1);
    }
    Some(acc)
}

/// All strictly increasing `m`-element index tuples from `0..q`, in
/// lexicographic order.
fn combinations(q: u64, m: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if m as u64 > q {
        return out;
    }
    let mut idx: Vec<u64> = (0..m as u64).collect();
    loop {
        out.push(idx.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] + (m as u64 - i as u64) < q {
                idx[i] += 1;
                for j in i + 1..m {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------
// verify-monomials
// ---------------------------------------------------------------------

/// Recomputes the discriminant monomial facts for every degree up to
/// `n_max` and reports each check. Any mismatch is an assertion failure;
/// an out-of-range `n_max` is a usage error.
pub fn run_verify_monomials(n_max: usize) -> Result<(), CliError> {
    if !(2..=8).contains(&n_max) {
        return Err(CliError::Usage(format!(
            "--n-max must be between 2 and 8, got {n_max}"
        )));
    }
    let mut all_ok = true;
    let mut check = |line: String, ok: bool| {
        println!("{} {}", line, if ok { "ok" } else { "FAILED" });
        all_ok &= ok;
    };
    for n in 2..=n_max {
        let disc = symbolic_discriminant(n)?;
        let c = disc.coefficient(&squares_monomial(n))?;
        check(
            format!("n={n} squares: coefficient {c}, |c| expected 1:"),
            c.abs() == BigInt::from(1),
        );
        if n >= 3 {
            let expected = BigInt::from(n as u64 - 2).pow(n as u32 - 2);
            let c = disc.coefficient(&sparse_monomial(n))?;
            check(
                format!("n={n} trinomial: coefficient {c}, |c| expected {expected}:"),
                c.abs() == expected,
            );
            match trinomial_identity(n) {
                Ok((eps, delta)) => check(
                    format!("n={n} identity: holds with signs (eps, delta) = ({eps:+}, {delta:+}):"),
                    true,
                ),
                Err(Error::NoSignMatch) => check(format!("n={n} identity: no sign pair matches:"), false),
                Err(e) => return Err(e.into()),
            }
        }
        // The square-root structure is verified on the printable range;
        // the root must contain the product of all middle variables with
        // coefficient exactly 1.
        if n <= 7 {
            match disc.reduce_mod(2).sqrt_char2() {
                Ok(root) => {
                    let c = root.coefficient(&char2_root_monomial(n))?;
                    check(
                        format!("n={n} char2: disc mod 2 is a square; root middle-product coefficient {c}, expected 1:"),
                        c == BigInt::from(1),
                    );
                }
                Err(Error::NotASquare) => {
                    check(format!("n={n} char2: disc mod 2 is not a square:"), false)
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    if all_ok {
        println!("verify-monomials: all checks passed for n = 2..={n_max}");
        Ok(())
    } else {
        Err(CliError::AssertionFailed(
            "one or more monomial checks failed".into(),
        ))
    }
}

// ---------------------------------------------------------------------
// show-disc
// ---------------------------------------------------------------------

/// Prints the canonical serialization of the degree-`n` symbolic
/// discriminant. Degrees past 7 are refused as unprintable.
pub fn run_show_disc(n: usize) -> Result<(), CliError> {
    if !(2..=7).contains(&n) {
        return Err(CliError::Usage(format!(
            "--n must be between 2 and 7 for printable output, got {n}"
        )));
    }
    println!("{}", symbolic_discriminant(n)?);
    Ok(())
}

// ---------------------------------------------------------------------
// count-squarefree
// ---------------------------------------------------------------------

/// Counts monic squarefree degree-`n` polynomials by full enumeration
/// and returns `(counted, expected)` where expected is the classical
/// exact count `q^n - q^(n-1)`.
pub fn count_monic_squarefree(field: &Field, n: usize) -> Result<(u64, u64), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!(
            "--n must be at least 2 for the classical count, got {n}"
        )));
    }
    let elements = field.enumerate()?;
    let q = elements.len() as u64;
    let total = (q as u128).checked_pow(n as u32).filter(|t| *t <= ENUMERATION_CAP);
    let Some(total) = total else {
        return Err(CliError::Budget(format!(
            "q^n = {q}^{n} exceeds the enumeration cap {ENUMERATION_CAP}"
        )));
    };
    let one = field.one();
    let mut lower = vec![0usize; n];
    let mut count = 0u64;
    loop {
        let mut coeffs: Vec<FieldElement> =
            lower.iter().map(|&i| elements[i].clone()).collect();
        coeffs.push(one.clone());
        if UniPoly::new(field, coeffs)?.is_squarefree()? {
            count += 1;
        }
        // Odometer over the lower coefficients, last position fastest.
        let mut i = n;
        loop {
            if i == 0 {
                let expected = (total - total / q as u128) as u64;
                return Ok((count, expected));
            }
            i -= 1;
            lower[i] += 1;
            if lower[i] < q as usize {
                break;
            }
            lower[i] = 0;
        }
    }
}

/// CLI wrapper for the count oracle: reports and asserts the classical
/// identity.
pub fn run_count_squarefree(p: u64, k: usize, n: usize) -> Result<(), CliError> {
    let field = Field::new(p, k)?;
    let (counted, expected) = count_monic_squarefree(&field, n)?;
    let verdict = if counted == expected { "match" } else { "MISMATCH" };
    println!(
        "count-squarefree: q={} n={} counted={} expected={} {}",
        field_order_u64(&field)?,
        n,
        counted,
        expected,
        verdict
    );
    if counted == expected {
        Ok(())
    } else {
        Err(CliError::AssertionFailed(format!(
            "monic squarefree count {counted} differs from the classical count {expected}"
        )))
    }
}

fn field_order_u64(field: &Field) -> Result<u64, CliError> {
    field
        .order()
        .and_then(|q| u64::try_from(q).ok())
        .ok_or_else(|| CliError::Budget("field order does not fit in 64 bits".into()))
}

// ---------------------------------------------------------------------
// density
// ---------------------------------------------------------------------

/// One trial of a density experiment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityRow {
    pub trial: u64,
    pub squarefree: u64,
    pub total: u64,
}

/// A full density experiment: per-trial counts plus totals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub q: u64,
    pub n: usize,
    pub c: u64,
    pub trials: u64,
    pub rows: Vec<DensityRow>,
    pub squarefree_total: u64,
    pub tuple_total: u64,
}

impl DensityReport {
    /// Aggregate density over all trials, as a reduced exact rational.
    pub fn aggregate(&self) -> Ratio<u64> {
        Ratio::new(self.squarefree_total, self.tuple_total)
    }
}

/// Runs `trials` density trials: each draws uniform random `c`-subsets
/// `S_0, ..., S_(n-1)` of the field, fixes the leading coefficient to 1,
/// and counts squarefree members of the sampled cube.
pub fn density_experiment(
    field: &Field,
    n: usize,
    c: u64,
    trials: u64,
    seed: u64,
) -> Result<DensityReport, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    if c == 0 {
        return Err(CliError::Usage("--cube-size must be at least 1".into()));
    }
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let elements = field.enumerate()?;
    let q = elements.len() as u64;
    if c > q {
        return Err(CliError::CTooLarge { c, q });
    }
    let per_trial = (c as u128).checked_pow(n as u32);
    let within_budget = per_trial
        .and_then(|t| t.checked_mul(trials as u128))
        .is_some_and(|b| b <= ENUMERATION_CAP);
    if !within_budget {
        return Err(CliError::Budget(format!(
            "C^n * trials = {c}^{n} * {trials} exceeds the enumeration cap {ENUMERATION_CAP}"
        )));
    }
    let per_trial = per_trial.unwrap() as u64;

    let one = field.one();
    let mut rng = Xoshiro256::seeded(seed);
    let mut rows = Vec::with_capacity(trials as usize);
    let mut squarefree_total = 0u64;
    // With C = q every draw returns the whole field, so all trials count
    // the same cube; counting it once changes no output.
    let mut full_cube_count: Option<u64> = None;
    for trial in 1..=trials {
        if let Some(squarefree) = full_cube_count {
            squarefree_total += squarefree;
            rows.push(DensityRow { trial, squarefree, total: per_trial });
            continue;
        }
        // Draw the n coefficient subsets for this trial, low degree
        // first, from one continuous random stream.
        let subsets: Vec<Vec<FieldElement>> = (0..n)
            .map(|_| {
                let mut pool: Vec<u64> = (0..q).collect();
                rng.subset(&mut pool, c as usize)
                    .into_iter()
                    .map(|i| elements[i as usize].clone())
                    .collect()
            })
            .collect();
        let mut pick = vec![0usize; n];
        let mut squarefree = 0u64;
        loop {
            let mut coeffs: Vec<FieldElement> = pick
                .iter()
                .zip(&subsets)
                .map(|(&i, s)| s[i].clone())
                .collect();
            coeffs.push(one.clone());
            if UniPoly::new(field, coeffs)?.is_squarefree()? {
                squarefree += 1;
            }
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < c as usize {
                    break;
                }
                pick[i] = 0;
            }
            if pick.iter().all(|&i| i == 0) {
                break;
            }
        }
        squarefree_total += squarefree;
        rows.push(DensityRow { trial, squarefree, total: per_trial });
        if c == q {
            full_cube_count = Some(squarefree);
        }
    }
    Ok(DensityReport {
        q,
        n,
        c,
        trials,
        rows,
        squarefree_total,
        tuple_total: per_trial * trials,
    })
}

/// CLI wrapper: runs the experiment, writes the CSV (per-trial rows plus
/// a `total` aggregate row), and asserts the exact full-cube identity
/// density = 1 - 1/q when `c = q`.
pub fn run_density(
    p: u64,
    k: usize,
    n: usize,
    c: u64,
    trials: u64,
    seed: u64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let field = Field::new(p, k)?;
    let report = density_experiment(&field, n, c, trials, seed)?;

    let mut w = csv_writer(out)?;
    w.write_record([
        "q",
        "n",
        "C",
        "trial",
        "squarefree_count",
        "total_count",
        "density_num",
        "density_den",
        "density_dec",
    ])?;
    let mut write_row = |trial: &str, sq: u64, total: u64| -> Result<(), CliError> {
        let ratio = Ratio::new(sq, total);
        w.write_record([
            report.q.to_string(),
            report.n.to_string(),
            report.c.to_string(),
            trial.to_string(),
            sq.to_string(),
            total.to_string(),
            ratio.numer().to_string(),
            ratio.denom().to_string(),
            decimal6(sq, total),
        ])?;
        Ok(())
    };
    for row in &report.rows {
        write_row(&row.trial.to_string(), row.squarefree, row.total)?;
    }
    write_row("total", report.squarefree_total, report.tuple_total)?;
    w.flush()?;
    drop(w);

    let aggregate = report.aggregate();
    emit_summary(
        out,
        &format!(
            "density: q={} n={} C={} trials={} aggregate={}/{} ({})",
            report.q,
            report.n,
            report.c,
            report.trials,
            aggregate.numer(),
            aggregate.denom(),
            decimal6(report.squarefree_total, report.tuple_total)
        ),
    );
    if c == report.q {
        let expected = Ratio::new(report.q - 1, report.q);
        if aggregate != expected {
            return Err(CliError::AssertionFailed(format!(
                "full-cube density {}/{} differs from the exact value {}/{}",
                aggregate.numer(),
                aggregate.denom(),
                expected.numer(),
                expected.denom()
            )));
        }
        emit_summary(
            out,
            &format!(
                "density: full cube C=q={} matches the exact identity 1 - 1/q = {}/{}",
                report.q,
                expected.numer(),
                expected.denom()
            ),
        );
    }
    Ok(())
}

// ---------------------------------------------------------------------
// theorem-check
// ---------------------------------------------------------------------

/// How a theorem check selects boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every qualifying box, in deterministic order.
    Exhaustive,
    /// `samples` random qualifying boxes drawn with `seed`.
    Sample { samples: u64, seed: u64 },
}

/// Totals from a theorem check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremStats {
    pub q: u64,
    pub n: usize,
    pub boxes: u64,
    pub guaranteed: u64,
    pub witnesses: u64,
    /// Boxes carrying a guarantee but yielding no witness. Any nonzero
    /// value falsifies the implementation, not the theorems.
    pub violations: u64,
}

/// Set sizes `[|S_0|, ..., |S_n|]` of the minimal qualifying box family
/// for a guarantee kind: the smallest sets the guarantee accepts, with
/// the ends always singletons (the leading one nonzero).
pub fn family_shape(kind: GuaranteeKind, n: usize) -> Vec<usize> {
    let mut shape = vec![1usize; n + 1];
    for (pos, slot) in shape.iter_mut().enumerate().take(n).skip(1) {
        *slot = match kind {
            GuaranteeKind::General => 3,
            GuaranteeKind::Char2 => 2,
            GuaranteeKind::Sparse => {
                if pos == 1 || pos == n - 1 {
                    n
                } else {
                    1
                }
            }
        };
    }
    shape
}

/// Number of boxes in a family: `q` choices for `S_0`, binomials for the
/// middles, `q - 1` nonzero choices for `S_n`. `None` on overflow.
pub fn family_count(q: u64, shape: &[usize]) -> Option<u128> {
    let mut acc = (q as u128).checked_mul(q as u128 - 1)?;
    for &m in &shape[1..shape.len() - 1] {
        acc = acc.checked_mul(binomial(q, m)?)?;
    }
    Some(acc)
}

/// Whether a kind's family can be nonempty at all over characteristic
/// `p`, before set sizes are considered.
fn kind_available(kind: GuaranteeKind, p: u64, n: usize) -> Result<(), String> {
    match kind {
        GuaranteeKind::General => Ok(()),
        GuaranteeKind::Char2 if p == 2 => Ok(()),
        GuaranteeKind::Char2 => Err(format!(
            "the char2 guarantee needs characteristic 2, got p={p}"
        )),
        GuaranteeKind::Sparse if n < 3 => {
            Err(format!("the sparse guarantee needs n >= 3, got n={n}"))
        }
        GuaranteeKind::Sparse if (n as u64 - 2) % p == 0 => Err(format!(
            "the sparse guarantee is refused: n - 2 = {} is divisible by the characteristic {p}",
            n - 2
        )),
        GuaranteeKind::Sparse => Ok(()),
    }
}

/// The qualifying families over `F_q` (characteristic `p`) at degree
/// `n`, in precedence order, each with its shape. Families whose shape
/// duplicates a higher-precedence family are dropped (at n = 3 the
/// sparse shape coincides with the general one), as are empty families.
/// Requesting a specific unavailable kind is a usage error.
pub fn qualifying_kinds(
    q: u64,
    p: u64,
    n: usize,
    filter: Option<GuaranteeKind>,
) -> Result<Vec<(GuaranteeKind, Vec<usize>)>, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    let all = [GuaranteeKind::General, GuaranteeKind::Char2, GuaranteeKind::Sparse];
    let mut selected = Vec::new();
    let mut shapes_seen: Vec<Vec<usize>> = Vec::new();
    for kind in all {
        if filter.is_some_and(|f| f != kind) {
            continue;
        }
        let explicit = filter.is_some();
        if let Err(reason) = kind_available(kind, p, n) {
            if explicit {
                return Err(CliError::Usage(reason));
            }
            continue;
        }
        let shape = family_shape(kind, n);
        if family_count(q, &shape) == Some(0) {
            if explicit {
                return Err(CliError::Usage(format!(
                    "no qualifying {kind} boxes over a field of order {q} at n={n}: \
                     a required set size exceeds the field"
                )));
            }
            continue;
        }
        if shapes_seen.contains(&shape) {
            continue;
        }
        shapes_seen.push(shape.clone());
        selected.push((kind, shape));
    }
    if selected.is_empty() {
        return Err(CliError::Usage(format!(
            "no guarantee family applies over a field of order {q} at n={n}"
        )));
    }
    Ok(selected)
}

/// Total qualifying boxes across the selected families; `None` when the
/// count overflows.
pub fn qualifying_box_count(
    q: u64,
    p: u64,
    n: usize,
    filter: Option<GuaranteeKind>,
) -> Result<Option<u128>, CliError> {
    let kinds = qualifying_kinds(q, p, n, filter)?;
    let mut total: u128 = 0;
    for (_, shape) in &kinds {
        match family_count(q, shape) {
            Some(c) => match total.checked_add(c) {
                Some(t) => total = t,
                None => return Ok(None),
            },
            None => return Ok(None),
        }
    }
    Ok(Some(total))
}

/// Draws one uniform random box from a family: singleton `S_0`, sorted
/// random subsets for the middles, nonzero singleton `S_n`.
fn sample_box(
    field: &Field,
    elements: &[FieldElement],
    shape: &[usize],
    rng: &mut Xoshiro256,
) -> Result<CoeffBox, CliError> {
    let q = elements.len() as u64;
    let n = shape.len() - 1;
    let mut sets = Vec::with_capacity(n + 1);
    sets.push(vec![elements[rng.below(q) as usize].clone()]);
    for &m in &shape[1..n] {
        let mut pool: Vec<u64> = (0..q).collect();
        let picked = rng.subset(&mut pool, m);
        sets.push(picked.into_iter().map(|i| elements[i as usize].clone()).collect());
    }
    sets.push(vec![elements[1 + rng.below(q - 1) as usize].clone()]);
    Ok(CoeffBox::new(field, sets)?)
}

/// Runs a theorem check, invoking `visit` once per box in deterministic
/// order with the box and its search outcome. Exhaustive mode enumerates
/// each family lexicographically (set indices ascending, later positions
/// cycling fastest); sample mode draws boxes round-robin across the
/// families from one seeded stream.
pub fn theorem_check_with<F>(
    field: &Field,
    n: usize,
    mode: Mode,
    filter: Option<GuaranteeKind>,
    mut visit: F,
) -> Result<TheoremStats, CliError>
where
    F: FnMut(&CoeffBox, &SearchOutcome) -> Result<(), CliError>,
{
    let elements = field.enumerate()?;
    let q = elements.len() as u64;
    let kinds = qualifying_kinds(q, field.characteristic(), n, filter)?;
    let mut stats = TheoremStats { q, n, boxes: 0, guaranteed: 0, witnesses: 0, violations: 0 };
    let mut process = |b: &CoeffBox| -> Result<(), CliError> {
        let outcome = search_squarefree(b)?;
        stats.boxes += 1;
        if outcome.guarantee.is_some() {
            stats.guaranteed += 1;
            if outcome.witness.is_none() {
                stats.violations += 1;
            }
        }
        if outcome.witness.is_some() {
            stats.witnesses += 1;
        }
        visit(b, &outcome)
    };
    match mode {
        Mode::Exhaustive => {
            let total: Option<u128> = kinds
                .iter()
                .try_fold(0u128, |t, (_, s)| family_count(q, s).and_then(|c| t.checked_add(c)));
            if total.is_none_or(|t| t > EXHAUSTIVE_BOX_CAP) {
                return Err(CliError::Budget(format!(
                    "exhaustive mode covers more than {EXHAUSTIVE_BOX_CAP} qualifying boxes; \
                     use --mode sample"
                )));
            }
            for (_, shape) in &kinds {
                // Per-position choice lists: singletons at the ends (the
                // leading one nonzero), m-subsets in between.
                let mut choices: Vec<Vec<Vec<u64>>> = Vec::with_capacity(n + 1);
                choices.push((0..q).map(|i| vec![i]).collect());
                for &m in &shape[1..n] {
                    choices.push(combinations(q, m));
                }
                choices.push((1..q).map(|i| vec![i]).collect());
                let mut pick = vec![0usize; n + 1];
                'family: loop {
                    let sets: Vec<Vec<FieldElement>> = pick
                        .iter()
                        .zip(&choices)
                        .map(|(&ci, cs)| {
                            cs[ci].iter().map(|&i| elements[i as usize].clone()).collect()
                        })
                        .collect();
                    process(&CoeffBox::new(field, sets)?)?;
                    let mut i = n + 1;
                    loop {
                        if i == 0 {
                            break 'family;
                        }
                        i -= 1;
                        pick[i] += 1;
                        if pick[i] < choices[i].len() {
                            break;
                        }
                        pick[i] = 0;
                    }
                }
            }
        }
        Mode::Sample { samples, seed } => {
            if samples == 0 {
                return Err(CliError::Usage("--samples must be at least 1".into()));
            }
            let mut rng = Xoshiro256::seeded(seed);
            for i in 0..samples {
                let (_, shape) = &kinds[i as usize % kinds.len()];
                let b = sample_box(field, &elements, shape, &mut rng)?;
                process(&b)?;
            }
        }
    }
    Ok(stats)
}

/// Renders a witness tuple as `(a_0;...;a_n)`.
fn witness_tuple(outcome: &SearchOutcome) -> String {
    match &outcome.witness {
        None => String::new(),
        Some(w) => {
            let parts: Vec<String> = w.tuple.iter().map(|e| e.to_string()).collect();
            format!("({})", parts.join(";"))
        }
    }
}

/// CLI wrapper: runs the check, writes one CSV row per box, and fails
/// the run if any guaranteed box produced no witness.
pub fn run_theorem_check(
    p: u64,
    k: usize,
    n: usize,
    mode: Mode,
    filter: Option<GuaranteeKind>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let field = Field::new(p, k)?;
    let q = field_order_u64(&field)?;
    // The writer opens lazily, at the first row, so a run refused during
    // validation emits no output at all.
    let mut writer: Option<csv::Writer<Box<dyn io::Write>>> = None;
    let stats = theorem_check_with(&field, n, mode, filter, |b, outcome| {
        let w = match &mut writer {
            Some(w) => w,
            None => {
                let mut new = csv_writer(out)?;
                new.write_record([
                    "q", "n", "box", "guarantee", "witness_found", "witness", "steps",
                ])?;
                writer.insert(new)
            }
        };
        let guarantee = match &outcome.guarantee {
            Some(g) => g.kind.to_string(),
            None => "none".to_string(),
        };
        w.write_record([
            q.to_string(),
            n.to_string(),
            b.to_string(),
            guarantee,
            outcome.witness.is_some().to_string(),
            witness_tuple(outcome),
            outcome.steps.to_string(),
        ])?;
        Ok(())
    })?;
    if let Some(mut w) = writer {
        w.flush()?;
    }

    let mode_name = match mode {
        Mode::Exhaustive => "exhaustive".to_string(),
        Mode::Sample { samples, seed } => format!("sample(samples={samples}, seed={seed})"),
    };
    emit_summary(
        out,
        &format!(
            "theorem-check: q={} n={} mode={} boxes={} guaranteed={} witnesses={} violations={}",
            stats.q, stats.n, mode_name, stats.boxes, stats.guaranteed, stats.witnesses,
            stats.violations
        ),
    );
    if stats.violations > 0 {
        return Err(CliError::AssertionFailed(format!(
            "{} guaranteed boxes yielded no squarefree witness",
            stats.violations
        )));
    }
    Ok(())
}

/// Parses a guarantee kind name from a flag or config value.
pub fn parse_guarantee(s: &str) -> Result<GuaranteeKind, CliError> {
    match s {
        "general" => Ok(GuaranteeKind::General),
        "char2" => Ok(GuaranteeKind::Char2),
        "sparse" => Ok(GuaranteeKind::Sparse),
        other => Err(CliError::Usage(format!(
            "unknown guarantee `{other}`; expected general, char2, or sparse"
        ))),
    }
}

/// Parses a mode name plus its sampling parameters.
pub fn parse_mode(
    name: &str,
    samples: Option<u64>,
    seed: Option<u64>,
) -> Result<Mode, CliError> {
    match name {
        "exhaustive" => Ok(Mode::Exhaustive),
        "sample" => {
            let samples = samples.ok_or_else(|| {
                CliError::Usage("--samples is required with --mode sample".into())
            })?;
            let seed = seed.ok_or_else(|| {
                CliError::Usage("--seed is required with --mode sample".into())
            })?;
            Ok(Mode::Sample { samples, seed })
        }
        other => Err(CliError::Usage(format!(
            "unknown mode `{other}`; expected exhaustive or sample"
        ))),
    }
}

/// Resolved output path, if any: `PathBuf` conversion for config values.
pub fn parse_out(s: Option<String>) -> Option<PathBuf> {
    s.map(PathBuf::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering_rounds_half_up() {
        assert_eq!(decimal6(4, 5), "0.800000");
        assert_eq!(decimal6(2, 3), "0.666667");
        assert_eq!(decimal6(1, 2_000_000), "0.000001"); // exactly half a ulp
        assert_eq!(decimal6(1, 3_000_000), "0.000000");
        assert_eq!(decimal6(7, 7), "1.000000");
        assert_eq!(decimal6(0, 9), "0.000000");
    }

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(binomial(9, 3), Some(84));
        assert_eq!(binomial(5, 4), Some(5));
        assert_eq!(binomial(2, 3), Some(0));
    }

    #[test]
    fn family_shapes_and_counts() {
        assert_eq!(family_shape(GuaranteeKind::General, 3), vec![1, 3, 3, 1]);
        assert_eq!(family_shape(GuaranteeKind::Char2, 4), vec![1, 2, 2, 2, 1]);
        assert_eq!(family_shape(GuaranteeKind::Sparse, 5), vec![1, 5, 1, 1, 5, 1]);
        // The sparse shape at n=3 collides with the general one.
        assert_eq!(
            family_shape(GuaranteeKind::Sparse, 3),
            family_shape(GuaranteeKind::General, 3)
        );
        // q=2, n=3, char2: 2 * C(2,2)^2 * 1 = 2 boxes.
        assert_eq!(family_count(2, &family_shape(GuaranteeKind::Char2, 3)), Some(2));
        // q=7, n=3, general: 7 * 35^2 * 6 = 51450.
        assert_eq!(family_count(7, &family_shape(GuaranteeKind::General, 3)), Some(51450));
    }

    #[test]
    fn kind_selection_deduplicates_and_filters() {
        // Over F_5 at n=3 the sparse family duplicates the general one.
        let kinds = qualifying_kinds(5, 5, 3, None).unwrap();
        let names: Vec<GuaranteeKind> = kinds.iter().map(|(k, _)| *k).collect();
        assert_eq!(names, vec![GuaranteeKind::General]);
        // At n=4 over F_5 (4 - 2 = 2 not divisible by 5) both survive.
        let kinds = qualifying_kinds(5, 5, 4, None).unwrap();
        let names: Vec<GuaranteeKind> = kinds.iter().map(|(k, _)| *k).collect();
        assert_eq!(names, vec![GuaranteeKind::General, GuaranteeKind::Sparse]);
        // Characteristic 2 brings the char2 family in.
        let kinds = qualifying_kinds(4, 2, 4, None).unwrap();
        let names: Vec<GuaranteeKind> = kinds.iter().map(|(k, _)| *k).collect();
        assert_eq!(names, vec![GuaranteeKind::General, GuaranteeKind::Char2]);
        // Explicitly requesting an unavailable kind is a usage error.
        assert!(matches!(
            qualifying_kinds(9, 3, 5, Some(GuaranteeKind::Sparse)),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            qualifying_kinds(5, 5, 3, Some(GuaranteeKind::Char2)),
            Err(CliError::Usage(_))
        ));
        // Unfiltered selection quietly skips what does not apply.
        let kinds = qualifying_kinds(2, 2, 3, None).unwrap();
        let names: Vec<GuaranteeKind> = kinds.iter().map(|(k, _)| *k).collect();
        assert_eq!(names, vec![GuaranteeKind::Char2]);
    }

    #[test]
    fn exhaustive_check_over_f2_cubics_finds_both_boxes() {
        // Over F_2 at n=3 only the char2 family exists and it has
        // exactly two boxes: S_0 = {0} or {1}, middles {0,1}, S_3 = {1}.
        let field = Field::new(2, 1).unwrap();
        let mut boxes = Vec::new();
        let stats = theorem_check_with(&field, 3, Mode::Exhaustive, None, |b, outcome| {
            boxes.push((b.to_string(), outcome.witness.is_some()));
            Ok(())
        })
        .unwrap();
        assert_eq!(stats.boxes, 2);
        assert_eq!(stats.guaranteed, 2);
        assert_eq!(stats.witnesses, 2);
        assert_eq!(stats.violations, 0);
        assert_eq!(boxes[0].0, "{0}x{0;1}x{0;1}x{1}");
        assert_eq!(boxes[1].0, "{1}x{0;1}x{0;1}x{1}");
    }

    #[test]
    fn sampled_check_is_deterministic() {
        let field = Field::new(5, 1).unwrap();
        let run = || {
            let mut rows = Vec::new();
            let stats = theorem_check_with(
                &field,
                3,
                Mode::Sample { samples: 20, seed: 42 },
                None,
                |b, outcome| {
                    rows.push(format!("{b} {}", witness_tuple(outcome)));
                    Ok(())
                },
            )
            .unwrap();
            (rows, stats.violations)
        };
        let (rows_a, v_a) = run();
        let (rows_b, v_b) = run();
        assert_eq!(rows_a, rows_b);
        assert_eq!((v_a, v_b), (0, 0));
    }

    #[test]
    fn density_full_cube_matches_the_classical_count() {
        // q=3, n=2, C=q: every trial sees all 9 monic quadratics, of
        // which 9 - 3 = 6 are squarefree.
        let field = Field::new(3, 1).unwrap();
        let report = density_experiment(&field, 2, 3, 2, 1).unwrap();
        assert_eq!(report.rows.len(), 2);
        for row in &report.rows {
            assert_eq!((row.squarefree, row.total), (6, 9));
        }
        assert_eq!(report.aggregate(), Ratio::new(2, 3));
    }

    #[test]
    fn density_validates_its_inputs() {
        let field = Field::new(5, 1).unwrap();
        assert!(matches!(
            density_experiment(&field, 2, 0, 1, 1),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            density_experiment(&field, 2, 6, 1, 1),
            Err(CliError::CTooLarge { c: 6, q: 5 })
        ));
        assert!(matches!(
            density_experiment(&field, 2, 5, 0, 1),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            density_experiment(&field, 9, 5, 100_000_000, 1),
            Err(CliError::Budget(_))
        ));
    }

    #[test]
    fn count_oracle_matches_known_small_fields() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(count_monic_squarefree(&f2, 2).unwrap(), (2, 2));
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(count_monic_squarefree(&f3, 2).unwrap(), (6, 6));
        let f4 = Field::new(2, 2).unwrap();
        // q=4, n=3: 64 - 16 = 48.
        assert_eq!(count_monic_squarefree(&f4, 3).unwrap(), (48, 48));
    }

    #[test]
    fn mode_parsing_requires_sampling_parameters() {
        assert_eq!(parse_mode("exhaustive", None, None).unwrap(), Mode::Exhaustive);
        assert_eq!(
            parse_mode("sample", Some(10), Some(3)).unwrap(),
            Mode::Sample { samples: 10, seed: 3 }
        );
        assert!(matches!(parse_mode("sample", None, Some(3)), Err(CliError::Usage(_))));
        assert!(matches!(parse_mode("sample", Some(10), None), Err(CliError::Usage(_))));
        assert!(matches!(parse_mode("both", None, None), Err(CliError::Usage(_))));
    }
}
