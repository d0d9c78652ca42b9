//! Shared oracle helpers for the integration tests.
//!
//! Everything here is implemented independently of the library's internals:
//! dense Kronecker-product matrices for the quantum-mechanical ground truth,
//! a from-scratch text-level symplectic model (its own parser, commutation
//! rule, GF(2) elimination, and candidate enumeration), and numerical
//! quadrature for the Gaussian noise averages. Tests compare library results
//! against these, never the library against itself.
#![allow(dead_code)]

use num_complex::Complex64;
use stabkit::code::StabilizerCode;
use stabkit::pauli::{PauliLetter, PauliOperator};

pub type Mat = Vec<Vec<Complex64>>;

pub fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

pub fn cone() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

pub fn identity(dim: usize) -> Mat {
    let mut m = vec![vec![czero(); dim]; dim];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = cone();
    }
    m
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ar, ac) = (a.len(), a[0].len());
    let (br, bc) = (b.len(), b[0].len());
    let mut out = vec![vec![czero(); ac * bc]; ar * br];
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let (ar, inner, bc) = (a.len(), b.len(), b[0].len());
    let mut out = vec![vec![czero(); bc]; ar];
    for i in 0..ar {
        for k in 0..inner {
            let aik = a[i][k];
            if aik == czero() {
                continue;
            }
            for j in 0..bc {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn matvec(a: &Mat, v: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
        .collect()
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(c: Complex64, a: &Mat) -> Mat {
    a.iter()
        .map(|row| row.iter().map(|x| c * x).collect())
        .collect()
}

pub fn trace(a: &Mat) -> Complex64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

pub fn max_abs_diff_mat(a: &Mat, b: &Mat) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| (x - y).norm()))
        .fold(0.0, f64::max)
}

pub fn sigma(letter: PauliLetter) -> Mat {
    let i = Complex64::new(0.0, 1.0);
    match letter {
        PauliLetter::I => identity(2),
        PauliLetter::X => vec![vec![czero(), cone()], vec![cone(), czero()]],
        PauliLetter::Y => vec![vec![czero(), -i], vec![i, czero()]],
        PauliLetter::Z => vec![vec![cone(), czero()], vec![czero(), -cone()]],
    }
}

/// Dense matrix of an operator: `i^phase ⊗_q σ_{letter(q)}`, with qubit 1 on
/// the least significant index bit (later qubits are Kronecker-multiplied on
/// the left).
pub fn dense_operator(p: &PauliOperator) -> Mat {
    let mut acc = vec![vec![cone()]];
    for q in 1..=p.n() {
        acc = kron(&sigma(p.letter(q)), &acc);
    }
    let i = Complex64::new(0.0, 1.0);
    let phase = i.powu(p.phase() as u32);
    mat_scale(phase, &acc)
}

/// Dense projector onto the code space: `Π_i (I + G_i)/2`.
pub fn code_projector(code: &StabilizerCode) -> Mat {
    let dim = 1usize << code.n();
    let mut acc = identity(dim);
    for g in code.generators() {
        let factor = mat_scale(
            Complex64::new(0.5, 0.0),
            &mat_add(&identity(dim), &dense_operator(g)),
        );
        acc = matmul(&acc, &factor);
    }
    acc
}

/// Basis-free Knill–Laflamme violation: `E` violates iff `P E P ≠ c P` for
/// every scalar `c` (equivalently for `c = Tr(PEP)/Tr(P)`).
pub fn dense_kl_violating(projector: &Mat, e: &Mat, tol: f64) -> bool {
    let pep = matmul(projector, &matmul(e, projector));
    let c = trace(&pep) / trace(projector);
    let target = mat_scale(c, projector);
    max_abs_diff_mat(&pep, &target) > tol
}

// ---------------------------------------------------------------------------
// Independent text-level symplectic model.
// ---------------------------------------------------------------------------

/// X/Z supports parsed straight from a generator string, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextPauli {
    pub x: Vec<bool>,
    pub z: Vec<bool>,
}

/// Parse strings like `"X3X10"` / `"Z1Z4Z8"` (unsigned, X/Y/Z letters only).
pub fn text_pauli(s: &str, n: usize) -> TextPauli {
    let mut x = vec![false; n];
    let mut z = vec![false; n];
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let letter = bytes[i] as char;
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let q: usize = s[start..i].parse().expect("digits after letter");
        assert!((1..=n).contains(&q), "index in range");
        match letter {
            'X' => x[q - 1] ^= true,
            'Z' => z[q - 1] ^= true,
            'Y' => {
                x[q - 1] ^= true;
                z[q - 1] ^= true;
            }
            other => panic!("unexpected letter {other}"),
        }
    }
    TextPauli { x, z }
}

/// Symplectic commutation: even total overlap of (x, z') and (z, x').
pub fn text_commutes(a: &TextPauli, b: &TextPauli) -> bool {
    let mut odd = false;
    for i in 0..a.x.len() {
        if (a.x[i] && b.z[i]) ^ (a.z[i] && b.x[i]) {
            odd = !odd;
        }
    }
    !odd
}

/// Concatenated (x|z) row of a text Pauli.
pub fn symplectic_row(p: &TextPauli) -> Vec<bool> {
    p.x.iter().chain(p.z.iter()).copied().collect()
}

/// Plain GF(2) elimination rank.
pub fn gf2_rank(rows: &[Vec<bool>]) -> usize {
    let mut basis: Vec<Vec<bool>> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for b in &basis {
            let pivot = b.iter().position(|&x| x).expect("basis rows nonzero");
            if v[pivot] {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi ^= bi;
                }
            }
        }
        if v.iter().any(|&x| x) {
            basis.push(v);
        }
    }
    basis.len()
}

/// Membership of `v` in the GF(2) row space of `rows`.
pub fn gf2_in_span(rows: &[Vec<bool>], v: &[bool]) -> bool {
    let mut all: Vec<Vec<bool>> = rows.to_vec();
    let before = gf2_rank(&all);
    all.push(v.to_vec());
    gf2_rank(&all) == before
}

/// Lexicographic `w`-combinations of `0..n`.
pub fn combinations(n: usize, w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for c in start..=(n - left) {
            cur.push(c);
            rec(c + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(0, n, w, &mut cur, &mut out);
    out
}

/// Independent minimum-weight search over the commutant minus the row space
/// of a generator list given as strings. Enumerates exactly the documented
/// order: weight-major, subsets lexicographic, letters base-3 with
/// `X < Z < Y` and the first subset qubit most significant. Returns
/// `(d, witness string, candidates examined)`.
pub fn independent_symplectic_distance(
    generator_strings: &[&str],
    n: usize,
    max_weight: usize,
) -> Option<(usize, String, u64)> {
    let generators: Vec<TextPauli> = generator_strings
        .iter()
        .map(|s| text_pauli(s, n))
        .collect();
    let rows: Vec<Vec<bool>> = generators.iter().map(symplectic_row).collect();
    let mut examined: u64 = 0;
    const LETTERS: [char; 3] = ['X', 'Z', 'Y'];
    for w in 1..=max_weight {
        for subset in combinations(n, w) {
            let mut letter_index = vec![0usize; w];
            loop {
                examined += 1;
                let text: String = subset
                    .iter()
                    .zip(&letter_index)
                    .map(|(&q, &li)| format!("{}{}", LETTERS[li], q + 1))
                    .collect();
                let candidate = text_pauli(&text, n);
                if generators.iter().all(|g| text_commutes(&candidate, g))
                    && !gf2_in_span(&rows, &symplectic_row(&candidate))
                {
                    return Some((w, text, examined));
                }
                // Increment the base-3 letter counter, last position fastest.
                let mut pos = w;
                let advanced = loop {
                    if pos == 0 {
                        break false;
                    }
                    pos -= 1;
                    if letter_index[pos] < 2 {
                        letter_index[pos] += 1;
                        break true;
                    }
                    letter_index[pos] = 0;
                };
                if !advanced {
                    break;
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Numerical quadrature for the Gaussian dephasing averages.
// ---------------------------------------------------------------------------

/// Composite Simpson integration of a complex-valued function.
pub fn simpson<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, intervals: usize) -> Complex64 {
    assert!(intervals >= 2 && intervals.is_multiple_of(2));
    let h = (b - a) / intervals as f64;
    let mut acc = f(a) + f(b);
    for i in 1..intervals {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += weight * f(a + i as f64 * h);
    }
    acc * (h / 3.0)
}

/// `⟨exp(−iΦ·half_delta)⟩` over `Φ ~ N(0, variance)`, by quadrature. The
/// exact value is `exp(−variance·half_delta²/2)`.
pub fn gaussian_phase_average(half_delta: f64, variance: f64) -> Complex64 {
    if variance == 0.0 {
        return cone();
    }
    let sigma = variance.sqrt();
    let limit = 10.0 * sigma;
    let density = |phi: f64| (-phi * phi / (2.0 * variance)).exp() / (sigma * (2.0 * std::f64::consts::PI).sqrt());
    simpson(
        |phi| Complex64::from_polar(1.0, -phi * half_delta) * density(phi),
        -limit,
        limit,
        4000,
    )
}
