use super::{check_alphabet, check_clique_size, Letter, StringFamily};
use crate::error::{Error, Result};

/// Largest family `balanced_type_family` will materialize.
const BALANCED_CAP: u128 = 2_000_000;

fn multinomial(parts: usize, each: usize) -> Option<u128> {
    // (parts*each)! / (each!)^parts, built as a product of binomials
    let mut total: u128 = 1;
    let mut placed = 0usize;
    for _ in 0..parts {
        for i in 1..=each {
            placed += 1;
            total = total.checked_mul(placed as u128)? / i as u128;
        }
    }
    Some(total)
}

fn next_permutation(v: &mut [Letter]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Balanced-type family for the single clique on letters `1..=s`.
///
/// With `q = k/t`, the first `s*q` positions run over every arrangement of
/// `q` copies of each letter in `1..=s` (lexicographic order), and position
/// `i` in the tail carries letter `b` for `(b-1)q < i <= bq`, `b = s+1..=t`.
/// The family has `(sq)! / (q!)^s` members.
pub fn balanced_type_family(t: usize, s: usize, k: usize) -> Result<StringFamily> {
    check_alphabet(t)?;
    check_clique_size(t, s)?;
    if k == 0 || k % t != 0 {
        return Err(Error::param(format!(
            "balanced construction needs t to divide k (t = {t}, k = {k})"
        )));
    }
    let q = k / t;
    let size = multinomial(s, q).filter(|&m| m <= BALANCED_CAP).ok_or_else(|| {
        Error::Resource(format!(
            "balanced family for t = {t}, s = {s}, k = {k} exceeds {BALANCED_CAP} members"
        ))
    })?;
    let mut prefix: Vec<Letter> = (1..=s as Letter)
        .flat_map(|a| std::iter::repeat_n(a, q))
        .collect();
    let tail: Vec<Letter> = (s as Letter + 1..=t as Letter)
        .flat_map(|b| std::iter::repeat_n(b, q))
        .collect();
    let mut strings = Vec::with_capacity(size as usize);
    loop {
        let mut x = prefix.clone();
        x.extend_from_slice(&tail);
        strings.push(x);
        if !next_permutation(&mut prefix) {
            break;
        }
    }
    debug_assert_eq!(strings.len() as u128, size);
    Ok(StringFamily::from_parts(t, k, strings))
}

/// Single-clique condition: some position where `x` and `y` differ and both
/// letters lie in `1..=s`.
pub fn differs_inside_clique(x: &[Letter], y: &[Letter], s: usize) -> bool {
    x.iter()
        .zip(y)
        .any(|(&a, &b)| a != b && (a as usize) <= s && (b as usize) <= s)
}

/// All concatenations `x ‖ y`, `x` outer and `y` inner.
pub fn concat_product(x: &StringFamily, y: &StringFamily) -> Result<StringFamily> {
    if x.t() != y.t() {
        return Err(Error::param(format!(
            "alphabet mismatch: {} vs {}",
            x.t(),
            y.t()
        )));
    }
    let mut strings = Vec::with_capacity(x.len() * y.len());
    for a in x.strings() {
        for b in y.strings() {
            let mut s = Vec::with_capacity(a.len() + b.len());
            s.extend_from_slice(a);
            s.extend_from_slice(b);
            strings.push(s);
        }
    }
    Ok(StringFamily::from_parts(x.t(), x.k() + y.k(), strings))
}

/// The `t` cyclic shifts of `1 2 ... t`.
pub fn cyclic_family(t: usize) -> Result<StringFamily> {
    check_alphabet(t)?;
    let strings = (0..t)
        .map(|shift| (0..t).map(|i| ((i + shift) % t + 1) as Letter).collect())
        .collect();
    Ok(StringFamily::from_parts(t, t, strings))
}
