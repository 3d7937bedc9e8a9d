use itertools::Itertools;

use super::{is_prime, FiniteGroup, GroupError, Result};

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        k => format!("{base}^{k}"),
    }
}

fn or_identity(s: String) -> String {
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

/// Cyclic group of order `n`; element `i` is `g^i`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(malformed(format!("cyclic:{n}"), "order must be at least 1"));
    }
    let labels = (0..n).map(|i| or_identity(power_label("g", i))).collect();
    let table = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
    FiniteGroup::from_flat(format!("cyclic:{n}"), labels, table)
}

/// Dihedral group of order `2n`; element `i + n*j` is `r^i s^j`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(malformed(format!("dihedral:{n}"), "n must be at least 3"));
    }
    let size = 2 * n;
    let decode = |x: usize| (x % n, x / n);
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (a, b) = decode(x);
        for y in 0..size {
            let (c, d) = decode(y);
            // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            table.push(rot + n * ((b + d) % 2));
        }
    }
    let labels = (0..size)
        .map(|x| {
            let (a, b) = decode(x);
            or_identity(power_label("r", a) + if b == 1 { "s" } else { "" })
        })
        .collect();
    FiniteGroup::from_flat(format!("dihedral:{n}"), labels, table)
}

/// Dicyclic group of order `4n`, `<a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>`.
///
/// Element `k + 2n*j` is `a^k x^j`. For `n` a power of two this is the
/// generalized quaternion group.
pub fn dicyclic(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(malformed(format!("dicyclic:{n}"), "n must be at least 2"));
    }
    let m = 2 * n;
    let size = 2 * m;
    let decode = |x: usize| (x % m, x / m);
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (k, j) = decode(x);
        for y in 0..size {
            let (l, i) = decode(y);
            let v = match (j, i) {
                (0, i) => (k + l) % m + m * i,
                (1, 0) => (k + m - l) % m + m,
                _ => (k + m - l + n) % m,
            };
            table.push(v);
        }
    }
    let labels = (0..size)
        .map(|x| {
            let (k, j) = decode(x);
            or_identity(power_label("a", k) + if j == 1 { "x" } else { "" })
        })
        .collect();
    FiniteGroup::from_flat(format!("dicyclic:{n}"), labels, table)
}

/// All permutations of `0..n` in lexicographic order (identity first).
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

pub(crate) fn is_even_permutation(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.iter().join(" "));
        out.push(')');
    }
    or_identity(out)
}

/// Symmetric group on `n <= 5` points; the product `st` applies `t` first.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 5 {
        return Err(malformed(format!("symmetric:{n}"), "n must be in 1..=5"));
    }
    let perms = permutations(n);
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = Vec::with_capacity(perms.len() * perms.len());
    for s in &perms {
        for t in &perms {
            let composed: Vec<usize> = t.iter().map(|&x| s[x]).collect();
            table.push(index[composed.as_slice()]);
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_flat(format!("symmetric:{n}"), labels, table)
}

/// Elementary abelian group `(Z_p)^k`, labelled by coordinate tuples.
pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    let spec = format!("elab:{p}^{k}");
    if !is_prime(p) {
        return Err(malformed(spec, "base must be prime"));
    }
    if k == 0 {
        return Err(malformed(spec, "exponent must be at least 1"));
    }
    let size = p.checked_pow(k as u32).ok_or_else(|| malformed(spec.clone(), "too large"))?;
    let digits = |mut x: usize| {
        let mut d = vec![0; k];
        for slot in d.iter_mut().rev() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let dx = digits(x);
        for y in 0..size {
            let dy = digits(y);
            table.push(dx.iter().zip(&dy).fold(0, |acc, (a, b)| acc * p + (a + b) % p));
        }
    }
    let labels = (0..size)
        .map(|x| {
            if x == 0 {
                "e".to_string()
            } else {
                format!("({})", digits(x).iter().join(","))
            }
        })
        .collect();
    FiniteGroup::from_flat(spec, labels, table)
}

/// Direct product with elements ordered lexicographically by factor indices.
pub fn direct_product(factors: &[&FiniteGroup]) -> Result<FiniteGroup> {
    let Some((first, rest)) = factors.split_first() else {
        return Err(malformed(String::new(), "empty product"));
    };
    if rest.is_empty() {
        return Ok((*first).clone());
    }
    let sizes: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let size: usize = sizes.iter().product();
    let decode = |mut x: usize| {
        let mut d = vec![0; sizes.len()];
        for (slot, &s) in d.iter_mut().zip(&sizes).rev() {
            *slot = x % s;
            x /= s;
        }
        d
    };
    let coords: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let mut table = Vec::with_capacity(size * size);
    for cx in &coords {
        for cy in &coords {
            let v = factors
                .iter()
                .zip(cx.iter().zip(cy))
                .fold(0, |acc, (g, (&a, &b))| acc * g.order() + g.mul(a, b));
            table.push(v);
        }
    }
    let labels = coords
        .iter()
        .enumerate()
        .map(|(x, c)| {
            if x == 0 {
                "e".to_string()
            } else {
                let mut parts = factors.iter().zip(c).map(|(g, &a)| g.label(a));
                format!("({})", parts.join(","))
            }
        })
        .collect();
    let name = factors.iter().map(|g| g.name()).join(" x ");
    FiniteGroup::from_flat(name, labels, table)
}

fn malformed(spec: String, reason: &str) -> GroupError {
    GroupError::MalformedSpec { spec, reason: reason.to_string() }
}
