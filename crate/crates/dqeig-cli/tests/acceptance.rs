//! Acceptance suite: one test per shipping criterion, each printing a
//! single PASS line with the measured numbers.  Tolerances are pinned
//! here and nowhere else; a failure of any test is a release blocker.

use std::process::Command;
use std::time::Instant;

use rand::Rng;

use dqeig::builtin::dense6_spectrum;
use dqeig::eigen::{all_eigenpairs, rqi, IterationSettings, SpectrumSettings};
use dqeig::linalg::{herm_rank1, hermitian_inverse, rayleigh_quotient, DQMatrix, DQVector};
use dqeig::oracle::reference_spectrum;
use dqeig::random::{random_hermitian, random_unit_vector, random_vector, rng_from_seed};
use dqeig::repr::{
    reconstruct, sigma, sigma_col, vector_from_real_columns, vector_to_real_columns,
};
use dqeig::{DualNumber, DualQuaternion, Quaternion};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_dqeig")
}

fn run_csv(args: &[&str]) -> (Vec<Vec<String>>, f64) {
    let start = Instant::now();
    let out = Command::new(bin())
        .args(args)
        .env_remove("DQEIG_SEED")
        .output()
        .expect("binary runs");
    let wall = start.elapsed().as_secs_f64();
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).expect("utf-8 report");
    let rows = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (rows, wall)
}

#[test]
fn criterion_1_bundled_instance_spectrum() {
    let (rows, wall) = run_csv(&["eig", "--example1", "--tol", "1e-5"]);
    assert_eq!(rows.len(), 6, "expected exactly six eigenvalues");
    let expected = dense6_spectrum();
    let mut total_iterations = 0usize;
    for (row, want) in rows.iter().zip(expected.iter()) {
        let st: f64 = row[4].parse().unwrap();
        let du: f64 = row[5].parse().unwrap();
        assert!(
            (st - want.st).abs() <= 1e-3 * want.st.abs(),
            "standard part {st} vs reference {}",
            want.st
        );
        assert!(
            (du - want.du).abs() <= 1e-3,
            "dual part {du} vs reference {}",
            want.du
        );
        let residual: f64 = row[8].parse().unwrap();
        assert!(residual <= 1e-5, "residual {residual:.3e} above 1e-5");
        total_iterations += row[6].parse::<usize>().unwrap();
        assert_eq!(row[9], "true", "row not converged: {row:?}");
    }
    assert!(
        total_iterations <= 60,
        "{total_iterations} total inner iterations exceed 60"
    );
    assert!(wall < 1.0, "wall time {wall:.3}s exceeds 1s");
    println!(
        "criterion 1 PASS: six reference eigenvalues within 1e-3, residuals <= 1e-5, \
         {total_iterations} iterations, {wall:.3}s"
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let settings = SpectrumSettings {
        inner: IterationSettings {
            eps: 1e-10,
            ..IterationSettings::default()
        },
        ..SpectrumSettings::default()
    };
    let mut worst_component = 0.0f64;
    let mut worst_reconstruction = 0.0f64;
    let mut checked = 0usize;
    let mut attempt = 0u64;
    while checked < 20 {
        assert!(
            attempt < 200,
            "could not find 20 instances with distinct standard spectra"
        );
        let n = [4usize, 6, 8][(attempt % 3) as usize];
        let a = random_hermitian(n, &mut rng_from_seed(2000 + attempt));
        attempt += 1;
        // Only instances with distinct standard spectra qualify; the
        // reference construction itself enforces that.
        let reference = match reference_spectrum(&a) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let result = all_eigenpairs(&a, &settings).unwrap();
        assert_eq!(result.pairs.len(), n, "attempt {attempt}: pair count");
        let mut got: Vec<DualNumber> = result.pairs.iter().map(|p| p.lambda).collect();
        got.sort_by(|x, y| y.cmp_total(x));
        for (g, want) in got.iter().zip(reference.iter()) {
            worst_component = worst_component
                .max((g.st - want.lambda.st).abs())
                .max((g.du - want.lambda.du).abs());
        }
        let mut rebuilt = DQMatrix::zeros(n, n);
        for pair in &result.pairs {
            rebuilt = rebuilt
                .add(&herm_rank1(&pair.vector, &pair.lambda))
                .unwrap();
        }
        worst_reconstruction = worst_reconstruction.max(a.sub(&rebuilt).unwrap().norm_fr());
        checked += 1;
    }
    assert!(
        worst_component <= 1e-7,
        "worst eigenvalue component deviation {worst_component:.3e} above 1e-7"
    );
    assert!(
        worst_reconstruction <= 1e-6,
        "worst reconstruction error {worst_reconstruction:.3e} above 1e-6"
    );
    println!(
        "criterion 2 PASS: 20 instances, eigenvalues within {worst_component:.3e}, \
         reconstruction within {worst_reconstruction:.3e}"
    );
}

#[test]
fn criterion_3_real_representation_isomorphism() {
    let mut rng = rng_from_seed(3000);
    let mut worst = 0.0f64;
    for i in 0..50usize {
        let m = rng.gen_range(1..=5usize);
        let k = rng.gen_range(1..=5usize);
        let n = rng.gen_range(1..=5usize);
        let a = DQMatrix::from_fn(m, k, |_, _| random_dq(&mut rng));
        let b = DQMatrix::from_fn(m, k, |_, _| random_dq(&mut rng));
        let c = DQMatrix::from_fn(k, n, |_, _| random_dq(&mut rng));

        // Multiplicativity of the full map.
        let lhs = sigma(&a.matmul(&c).unwrap()).value;
        let rhs = sigma(&a).value.mul(&sigma(&c).value).unwrap();
        worst = worst.max(lhs.max_abs_diff(&rhs) / (1.0 + rhs.max_abs()));

        // Additivity: both sides add the same reals, so exact equality.
        let lhs = sigma(&a.add(&b).unwrap()).value;
        let rhs = sigma(&a).value.add(&sigma(&b).value).unwrap();
        assert_eq!(lhs.st, rhs.st, "instance {i}: additive standard parts");
        assert_eq!(lhs.du, rhs.du, "instance {i}: additive dual parts");

        // Multiplicativity against the column map.
        let lhs = sigma_col(&a.matmul(&c).unwrap()).value;
        let rhs = sigma(&a).value.mul(&sigma_col(&c).value).unwrap();
        worst = worst.max(lhs.max_abs_diff(&rhs) / (1.0 + rhs.max_abs()));

        // Column-map round trip is bitwise.
        let back = reconstruct(&sigma_col(&a), m, k).unwrap();
        for r in 0..m {
            for s in 0..k {
                assert_eq!(a[(r, s)], back[(r, s)], "instance {i}: entry ({r}, {s})");
            }
        }

        // Vector round trip is bitwise.
        let x = random_vector(k, &mut rng);
        let (st, du) = vector_to_real_columns(&x);
        let back = vector_from_real_columns(&st, &du).unwrap();
        for r in 0..k {
            assert_eq!(x[r], back[r], "instance {i}: vector entry {r}");
        }
    }
    assert!(
        worst <= 1e-12,
        "worst relative deviation {worst:.3e} above 1e-12"
    );
    println!(
        "criterion 3 PASS: 50 instances, worst relative deviation {worst:.3e}, \
         round trips bitwise"
    );
}

#[test]
fn criterion_4_monotone_standard_residual() {
    // The per-step residual guarantee is stated in the dual 2-norm, whose
    // leading (standard) component is asserted non-increasing at every
    // step of every run.  The flat real 2-norm is not monotone: the dual
    // component of the residual may transiently grow while the standard
    // part shrinks.
    let mut runs = 0usize;
    let mut steps = 0usize;
    for i in 0..100u64 {
        let n = 3 + (i % 6) as usize;
        let a = random_hermitian(n, &mut rng_from_seed(4000 + i));
        let v0 = random_unit_vector(n, &mut rng_from_seed(9000 + i));
        let settings = IterationSettings {
            eps: 1e-9,
            ..IterationSettings::default()
        };
        let (_, trace) = rqi(&a, &v0, &settings).unwrap();
        let mut prev = f64::INFINITY;
        for step in &trace.steps {
            assert!(
                step.residual_st <= prev + 1e-10,
                "run {i}: standard residual rose from {prev:.6e} to {:.6e} at step {}",
                step.residual_st,
                step.k
            );
            prev = step.residual_st;
            steps += 1;
        }
        runs += 1;
    }
    println!(
        "criterion 4 PASS: {runs} runs, {steps} steps, standard residual never rose \
         by more than 1e-10"
    );
}

#[test]
fn criterion_5_minimal_residual_of_the_rayleigh_quotient() {
    let mut rng = rng_from_seed(5000);
    let mut comparisons = 0usize;
    for i in 0..50usize {
        let n = 3 + (i % 4);
        let a = random_hermitian(n, &mut rng);
        let x = random_unit_vector(n, &mut rng);
        let theta = rayleigh_quotient(&a, &x).unwrap();
        let base = shifted_norm(&a, &x, &theta);
        let spread = 1.0 + a.norm_fr();
        for j in 0..100usize {
            let lambda = DualNumber::new(
                spread * rng.gen_range(-1.0..1.0f64),
                spread * rng.gen_range(-1.0..1.0f64),
            );
            let other = shifted_norm(&a, &x, &lambda);
            assert_ne!(
                base.cmp_total(&other),
                std::cmp::Ordering::Greater,
                "instance {i} shift {j}: quotient residual {base:?} exceeds shifted \
                 residual {other:?} at shift {lambda:?}"
            );
            comparisons += 1;
        }
    }
    assert_eq!(comparisons, 5000);
    println!("criterion 5 PASS: {comparisons} shift comparisons, zero violations of minimality");
}

#[test]
fn criterion_6_circle_laplacian_iteration_budget() {
    let (rows, wall) = run_csv(&[
        "bench",
        "--sizes",
        "10,20,50,100",
        "--seeds",
        "1",
        "--alpha",
        "1.0",
    ]);
    assert_eq!(rows.len(), 8, "expected an rqi and a pm row per size");
    let mut summary = String::new();
    for pair in rows.chunks(2) {
        let (rqi_row, pm_row) = (&pair[0], &pair[1]);
        assert_eq!(rqi_row[0], "rqi");
        assert_eq!(pm_row[0], "pm");
        let n = &rqi_row[1];
        assert_eq!(rqi_row[9], "true", "rqi did not converge at n={n}");
        let rqi_iterations: usize = rqi_row[6].parse().unwrap();
        let residual: f64 = rqi_row[8].parse().unwrap();
        assert!(
            rqi_iterations <= 10,
            "n={n}: rqi took {rqi_iterations} iterations"
        );
        assert!(residual <= 1e-5, "n={n}: rqi residual {residual:.3e}");
        let pm_iterations: usize = pm_row[6].parse().unwrap();
        assert!(
            pm_iterations >= 10 * rqi_iterations || pm_iterations == 15000,
            "n={n}: pm took only {pm_iterations} iterations against rqi's {rqi_iterations}"
        );
        summary.push_str(&format!(" n={n}:{rqi_iterations}/{pm_iterations}"));
    }
    assert!(wall < 60.0, "bench wall time {wall:.1}s exceeds 60s");
    println!("criterion 6 PASS: rqi/pm iterations{summary}, wall {wall:.1}s");
}

#[test]
fn criterion_7_inverse_eigenvalue_law() {
    let mut worst = 0.0f64;
    let mut checked = 0usize;
    let mut attempt = 0u64;
    while checked < 10 {
        assert!(
            attempt < 200,
            "could not find 10 well-conditioned instances"
        );
        let n = 4 + (attempt % 3) as usize;
        let a = random_hermitian(n, &mut rng_from_seed(7000 + attempt));
        attempt += 1;
        let spectrum = match reference_spectrum(&a) {
            Ok(s) => s,
            Err(_) => continue,
        };
        // Nonsingular with margin: inverse eigenvalues stay O(1), so the
        // absolute 1e-7 comparison below is meaningful.
        let smallest = spectrum
            .iter()
            .map(|p| p.lambda.st.abs())
            .fold(f64::INFINITY, f64::min);
        if smallest < 0.5 {
            continue;
        }
        let inv = hermitian_inverse(&a).unwrap();
        let inv_spectrum = reference_spectrum(&inv).unwrap();
        let mut expected: Vec<DualNumber> = spectrum
            .iter()
            .map(|p| {
                DualNumber::new(
                    1.0 / p.lambda.st,
                    -p.lambda.du / (p.lambda.st * p.lambda.st),
                )
            })
            .collect();
        expected.sort_by(|x, y| y.cmp_total(x));
        assert_eq!(inv_spectrum.len(), expected.len());
        for (got, want) in inv_spectrum.iter().zip(expected.iter()) {
            worst = worst
                .max((got.lambda.st - want.st).abs())
                .max((got.lambda.du - want.du).abs());
        }
        checked += 1;
    }
    assert!(worst <= 1e-7, "worst deviation {worst:.3e} above 1e-7");
    println!("criterion 7 PASS: 10 inverses, eigenvalue law holds within {worst:.3e}");
}

#[test]
fn criterion_8_scalar_property_suite() {
    let mut rng = rng_from_seed(8000);
    let cases = 1000usize;

    // Infinitesimals annihilate: (0 + a eps)(0 + b eps) = 0 exactly.
    for _ in 0..cases {
        let a = DualNumber::new(0.0, rng.gen_range(-1e3..1e3f64));
        let b = DualNumber::new(0.0, rng.gen_range(-1e3..1e3f64));
        assert_eq!(a * b, DualNumber::new(0.0, 0.0));
    }

    // Division round trips, all three levels of the tower.
    for _ in 0..cases {
        let a = random_dual(&mut rng);
        let b = appreciable_dual(&mut rng);
        let back = a.checked_div(&b).unwrap() * b;
        assert_dual_close(&back, &a, "dual division");

        let p = random_quat(&mut rng);
        let q = appreciable_quat(&mut rng);
        let back = (p * q.inv().unwrap()) * q;
        assert_quat_close(&back, &p, "quaternion division");

        let x = random_dq(&mut rng);
        let y = appreciable_dq(&mut rng);
        let back = (x * y.inv().unwrap()) * y;
        assert_dq_close(&back, &x, "dual quaternion division");
    }

    // Square roots square back.
    for _ in 0..cases {
        let a = DualNumber::new(rng.gen_range(1e-3..1e3f64), rng.gen_range(-1e3..1e3f64));
        let r = a.sqrt().unwrap();
        assert_dual_close(&(r * r), &a, "sqrt");
    }

    // Total-order axioms on random triples.
    for _ in 0..cases {
        use std::cmp::Ordering;
        let (a, b, c) = (
            random_dual(&mut rng),
            random_dual(&mut rng),
            random_dual(&mut rng),
        );
        assert_eq!(a.cmp_total(&b), b.cmp_total(&a).reverse());
        let mut sorted = [a, b, c];
        sorted.sort_by(|x, y| x.cmp_total(y));
        assert_ne!(sorted[0].cmp_total(&sorted[1]), Ordering::Greater);
        assert_ne!(sorted[1].cmp_total(&sorted[2]), Ordering::Greater);
        assert_ne!(sorted[0].cmp_total(&sorted[2]), Ordering::Greater);
    }

    // Hamilton relations: the exact unit table, and their consequences
    // (associativity, multiplicative norms) on random products.
    let i = Quaternion::I;
    let j = Quaternion::J;
    let k = Quaternion::K;
    let minus_one = Quaternion::real(-1.0);
    assert_eq!(i * i, minus_one);
    assert_eq!(j * j, minus_one);
    assert_eq!(k * k, minus_one);
    assert_eq!(i * j, k);
    assert_eq!(j * k, i);
    assert_eq!(k * i, j);
    assert_eq!(j * i, -k);
    assert_eq!(k * j, -i);
    assert_eq!(i * k, -j);
    assert_eq!(i * j * k, minus_one);
    for _ in 0..cases {
        let p = random_quat(&mut rng);
        let q = random_quat(&mut rng);
        let r = random_quat(&mut rng);
        assert_quat_close(&((p * q) * r), &(p * (q * r)), "associativity");
        let lhs = (p * q).norm();
        let rhs = p.norm() * q.norm();
        assert!(
            (lhs - rhs).abs() <= 1e-10 * (1.0 + rhs),
            "norm multiplicativity: {lhs} vs {rhs}"
        );
    }

    // Norm-sum identity on appreciable vectors:
    // ||x+y||^2 = ||x||^2 + ||y||^2 + <x,y> + <y,x>.
    let mut done = 0usize;
    while done < cases {
        let x = appreciable_vec(3, &mut rng);
        let y = appreciable_vec(3, &mut rng);
        let sum = x.add(&y).unwrap();
        if !sum.appreciable() {
            continue;
        }
        let lhs = sum.norm2() * sum.norm2();
        let cross = x.inner(&y).unwrap() + y.inner(&x).unwrap();
        assert!(
            cross.st.imag_residue() <= 1e-10 * (1.0 + cross.st.norm()),
            "cross terms not real"
        );
        let rhs =
            x.norm2() * x.norm2() + y.norm2() * y.norm2() + DualNumber::new(cross.st.w, cross.du.w);
        assert_dual_close(&lhs, &rhs, "norm-sum identity");
        done += 1;
    }

    println!("criterion 8 PASS: {cases} cases per property, zero violations");
}

// ---- helpers ----

fn shifted_norm(a: &DQMatrix, x: &DQVector, lambda: &DualNumber) -> DualNumber {
    a.shift_diag(lambda).unwrap().matvec(x).unwrap().norm2()
}

fn random_dual(rng: &mut impl Rng) -> DualNumber {
    DualNumber::new(rng.gen_range(-1e2..1e2f64), rng.gen_range(-1e2..1e2f64))
}

fn appreciable_dual(rng: &mut impl Rng) -> DualNumber {
    loop {
        let a = random_dual(rng);
        if a.st.abs() > 0.5 {
            return a;
        }
    }
}

fn random_quat(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-1e2..1e2f64),
        rng.gen_range(-1e2..1e2f64),
        rng.gen_range(-1e2..1e2f64),
        rng.gen_range(-1e2..1e2f64),
    )
}

fn appreciable_quat(rng: &mut impl Rng) -> Quaternion {
    loop {
        let q = random_quat(rng);
        if q.norm() > 0.5 {
            return q;
        }
    }
}

fn random_dq(rng: &mut impl Rng) -> DualQuaternion {
    DualQuaternion::new(random_quat(rng), random_quat(rng))
}

fn appreciable_dq(rng: &mut impl Rng) -> DualQuaternion {
    DualQuaternion::new(appreciable_quat(rng), random_quat(rng))
}

fn appreciable_vec(n: usize, rng: &mut impl Rng) -> DQVector {
    loop {
        let v = DQVector::from_fn(n, |_| random_dq(rng));
        if v.appreciable() {
            return v;
        }
    }
}

fn assert_dual_close(got: &DualNumber, want: &DualNumber, what: &str) {
    let scale = 1.0 + want.st.abs() + want.du.abs();
    assert!(
        (got.st - want.st).abs() <= 1e-10 * scale && (got.du - want.du).abs() <= 1e-10 * scale,
        "{what}: {got:?} vs {want:?}"
    );
}

fn assert_quat_close(got: &Quaternion, want: &Quaternion, what: &str) {
    let scale = 1.0 + want.norm();
    assert!(
        (*got - *want).norm() <= 1e-9 * scale,
        "{what}: {got:?} vs {want:?}"
    );
}

fn assert_dq_close(got: &DualQuaternion, want: &DualQuaternion, what: &str) {
    let scale = 1.0 + want.max_abs();
    let diff = *got - *want;
    assert!(
        diff.max_abs() <= 1e-9 * scale,
        "{what}: {got:?} vs {want:?}"
    );
}
