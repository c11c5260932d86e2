use crate::comod::{FreeExtension, GradedAlgebra};
use crate::error::{Error, Result};
use crate::findim::{from_presentation, function_algebra, group_algebra, FiniteGroup, Sparse, StructAlg, StructHopf};
use crate::scalar::{Coef, SymTable, TPoly};

/// `S3` or `Z<n>`.
pub fn group_named(g: &str) -> Result<FiniteGroup> {
    match g {
        "S3" => Ok(FiniteGroup::sym(3)),
        _ => g
            .strip_prefix('Z')
            .and_then(|n| n.parse::<usize>().ok())
            .map(FiniteGroup::cyclic)
            .ok_or_else(|| Error::UnknownEntry(g.to_string())),
    }
}

/// Finite-dimensional Hopf algebra on an explicit basis: `C<G>`, `O<G>`,
/// or a finite presented entry (`u<d>`, `taft<N>`).
pub fn struct_hopf(name: &str) -> Result<StructHopf> {
    if let Some(g) = name.strip_prefix('C') {
        if let Ok(g) = group_named(g) {
            return Ok(group_algebra(&g));
        }
    }
    if let Some(g) = name.strip_prefix('O') {
        if let Ok(g) = group_named(g) {
            return Ok(function_algebra(&g));
        }
    }
    if let Some(n) = name.strip_prefix("taft").and_then(|s| s.parse::<usize>().ok()) {
        return from_presentation(&super::hopf(name)?, n * n);
    }
    if let Some(d) = name.strip_prefix('u').and_then(|s| s.parse::<u32>().ok()) {
        let e = super::ud_e(d) as usize;
        return from_presentation(&super::hopf(name)?, e * e * e);
    }
    Err(Error::UnknownEntry(name.to_string()))
}

/// Names accepted by [`struct_hopf`] that appear in the catalog listing.
pub const FINITE_HOPF: [&str; 11] = ["CZ2", "OZ2", "CZ6", "OZ6", "CS3", "OS3", "u3", "u4", "u6", "taft2", "taft3"];

fn alg(name: &str, labels: Vec<String>, n: usize, f: impl Fn(usize, usize) -> Sparse, unit: Sparse) -> StructAlg {
    let mult = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
    StructAlg { name: name.into(), labels, mult, unit }
}

/// Quaternions over `Q`; `i` has degree `(1,0)`, `j` has degree `(0,1)`.
pub fn quaternions() -> GradedAlgebra {
    // i*i = -1, i*j = k, ...; entries are (index, sign)
    const T: [[(usize, i64); 4]; 4] = [
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, -1), (3, 1), (2, -1)],
        [(2, 1), (3, -1), (0, -1), (1, 1)],
        [(3, 1), (2, 1), (1, -1), (0, -1)],
    ];
    let labels = ["1", "i", "j", "k"].map(String::from).to_vec();
    let a = alg("quaternions", labels, 4, |x, y| vec![(T[x][y].0, Coef::int(T[x][y].1))], vec![(0, Coef::one())]);
    GradedAlgebra { alg: a, group: FiniteGroup::product(&[2, 2]), degree: vec![0, 2, 1, 3] }
}

/// `M_n(Q)` with `deg E_ij = i - j mod n`.
pub fn matrix_algebra(n: usize) -> GradedAlgebra {
    let labels = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    let a = alg(
        &format!("M{n}"),
        labels,
        n * n,
        |x, y| if x % n == y / n { vec![(x / n * n + y % n, Coef::one())] } else { vec![] },
        (0..n).map(|i| (i * n + i, Coef::one())).collect(),
    );
    let degree = (0..n * n).map(|k| (k / n + n - k % n) % n).collect();
    GradedAlgebra { alg: a, group: FiniteGroup::cyclic(n), degree }
}

/// `Q[x]/(x^n)` graded by `Z/n`; graded but not strongly graded for `n > 1`.
pub fn truncated_polynomials(n: usize) -> GradedAlgebra {
    let labels = (0..n).map(|i| format!("x^{i}")).collect();
    let a = alg(
        &format!("Q[x]/(x^{n})"),
        labels,
        n,
        |i, j| if i + j < n { vec![(i + j, Coef::one())] } else { vec![] },
        vec![(0, Coef::one())],
    );
    GradedAlgebra { alg: a, group: FiniteGroup::cyclic(n), degree: (0..n).collect() }
}

/// `Q[x, x^-1]` over `B = Q[u, u^-1]`, `u = x^n`, with module basis
/// `1, x, ..., x^(n-1)` and `δ(x^i) = x^i (x) g^i` in `C[Z/n]`.
pub fn laurent_extension(n: usize) -> FreeExtension<TPoly> {
    let syms = SymTable::new(&[("u", true)]).expect("one symbol");
    let u = TPoly::sym(&syms, 0);
    let one = TPoly::constant(Coef::one());
    let mult = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i + j < n { vec![(i + j, one.clone())] } else { vec![(i + j - n, u.clone())] })
                .collect()
        })
        .collect();
    FreeExtension {
        name: format!("laurent{n}"),
        labels: (0..n).map(|i| format!("x^{i}")).collect(),
        mult,
        unit: vec![(0, one.clone())],
        h: group_algebra(&FiniteGroup::cyclic(n)),
        delta: (0..n).map(|i| vec![(i, i, one.clone())]).collect(),
    }
}

/// Graded entries of the catalog by name.
pub fn graded(name: &str) -> Result<GradedAlgebra> {
    match name {
        "quaternions" => Ok(quaternions()),
        _ => match name.strip_prefix('M').and_then(|s| s.parse::<usize>().ok()) {
            Some(n) if n >= 1 => Ok(matrix_algebra(n)),
            _ => Err(Error::UnknownEntry(name.to_string())),
        },
    }
}
