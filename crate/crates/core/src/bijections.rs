//! Invertible maps between pattern classes, with extensional certificates.
//!
//! | map | domain | codomain |
//! |-----|--------|----------|
//! | [`f_312_to_213`] | F(n; 312) | F(n; 213) |
//! | [`g_213_to_312`] | F(n; 213) | F(n; 312) |
//! | [`swap23`] | F(n; 312) | F(n; 312) |
//! | [`h_321`] | F(n; 321) | S(n−1; 321) |
//! | [`h_inverse_321`] | S(n−1; 321) | F(n; 321) |
//! | [`alpha_motzkin`] | Motzkin permutations of length n−1 | F(n; 231) |
//! | [`alpha_inverse`] | F(n; 231) | Motzkin permutations of length n−1 |

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerate::{avoiding_permutations, enumerate_avoiding, motzkin_permutations, require_member};
use crate::error::{guard, Error, Result};
use crate::pattern::PatternSet;
use crate::perm::{standardize, Permutation};

fn class(s: &str) -> PatternSet {
    PatternSet::parse(s).expect("static pattern set")
}

// Length of the block 1,2,…,k at the start of `run`.
fn consecutive_prefix(run: &[u8]) -> usize {
    run.iter().enumerate().take_while(|&(i, &v)| v as usize == i + 1).count()
}

fn is_consecutive(w: &[u8]) -> bool {
    w.windows(2).all(|x| x[1] == x[0] + 1)
}

fn structure_error(map: &str, w: &[u8]) -> Error {
    Error::IdentityFailed(format!("{map}: unexpected first run in {w:?}"))
}

/// Run-length preserving map from 312-avoiding to 213-avoiding flattened
/// partitions.
///
/// A non-identity first run is `1⋯k (k+2)⋯t`; it becomes
/// `1⋯k (k+2+n−t)⋯n`. The rest of the word is standardized, mapped
/// recursively and shifted up by `k`.
pub fn f_312_to_213(p: &Permutation) -> Result<Permutation> {
    require_member("f", p, &class("312"))?;
    Ok(Permutation::from_word_unchecked(f_word(p.word())?))
}

fn f_word(w: &[u8]) -> Result<Vec<u8>> {
    let n = w.len();
    let run_len = 1 + w.windows(2).take_while(|x| x[0] < x[1]).count();
    if run_len == n {
        return Ok(w.to_vec());
    }
    let first = &w[..run_len];
    let k = consecutive_prefix(first);
    let tail = &first[k..];
    if k == 0 || tail[0] as usize != k + 2 || !is_consecutive(tail) {
        return Err(structure_error("f", w));
    }
    let t = *tail.last().unwrap() as usize;
    let shift = (n - t) as u8;
    let mut out: Vec<u8> = first[..k].to_vec();
    out.extend(tail.iter().map(|&v| v + shift));
    let rest = standardize(&w[run_len..])?;
    out.extend(f_word(rest.word())?.into_iter().map(|v| v + k as u8));
    Ok(out)
}

/// Inverse of [`f_312_to_213`]: a first run `1⋯k q′` with `q′` ending at
/// `n` becomes `1⋯k (k+2)⋯(k+1+|q′|)`.
pub fn g_213_to_312(p: &Permutation) -> Result<Permutation> {
    require_member("g", p, &class("213"))?;
    Ok(Permutation::from_word_unchecked(g_word(p.word())?))
}

fn g_word(w: &[u8]) -> Result<Vec<u8>> {
    let n = w.len();
    let run_len = 1 + w.windows(2).take_while(|x| x[0] < x[1]).count();
    if run_len == n {
        return Ok(w.to_vec());
    }
    let first = &w[..run_len];
    let k = consecutive_prefix(first);
    let tail = &first[k..];
    if k == 0 || !is_consecutive(tail) || *tail.last().unwrap() as usize != n {
        return Err(structure_error("g", w));
    }
    let t = k + 1 + tail.len();
    let mut out: Vec<u8> = first[..k].to_vec();
    out.extend((k + 2..=t).map(|v| v as u8));
    let rest: Vec<u8> = w[run_len..].iter().map(|&v| v - k as u8).collect();
    let rest = Permutation::new(rest).map_err(|_| structure_error("g", w))?;
    // Standard values 1, 2, 3, … of the remainder go back to k+1, t+1, t+2, ….
    let remaining: Vec<u8> = std::iter::once(k + 1).chain(t + 1..=n).map(|v| v as u8).collect();
    out.extend(g_word(rest.word())?.into_iter().map(|v| remaining[v as usize - 1]));
    Ok(out)
}

/// Exchanges the values 2 and 3 in a 312-avoiding flattened partition.
pub fn swap23(p: &Permutation) -> Result<Permutation> {
    if p.len() < 3 {
        return Err(Error::OutOfDomain { map: "swap23", input: p.to_comma(), class: "F(n; 312) with n ≥ 3".into() });
    }
    require_member("swap23", p, &class("312"))?;
    let word = p
        .word()
        .iter()
        .map(|&v| match v {
            2 => 3,
            3 => 2,
            v => v,
        })
        .collect();
    Ok(Permutation::from_word_unchecked(word))
}

/// Drops the leading 1 of a 321-avoiding flattened partition and
/// decrements the rest.
pub fn h_321(p: &Permutation) -> Result<Permutation> {
    if p.is_empty() {
        return Err(Error::OutOfDomain { map: "h", input: String::new(), class: "F(n; 321), n ≥ 1".into() });
    }
    require_member("h", p, &class("321"))?;
    Ok(Permutation::from_word_unchecked(p.word()[1..].iter().map(|&v| v - 1).collect()))
}

/// Increments every entry of a 321-avoiding permutation and prepends 1.
/// The result is always flattened; a non-flattened result is reported as
/// an identity failure.
pub fn h_inverse_321(s: &Permutation) -> Result<Permutation> {
    if s.contains(&"321".parse()?) {
        return Err(Error::OutOfDomain { map: "h-inv", input: s.to_comma(), class: "S(n−1; 321)".into() });
    }
    let word = std::iter::once(1).chain(s.word().iter().map(|&v| v + 1)).collect();
    let out = Permutation::new(word)?;
    if !out.is_flattened() {
        return Err(Error::IdentityFailed(format!("h-inv({s}) = {out} is not flattened")));
    }
    Ok(out)
}

/// Increments a Motzkin permutation, reverses it and prepends 1.
pub fn alpha_motzkin(s: &Permutation) -> Result<Permutation> {
    if !s.is_motzkin() {
        return Err(Error::OutOfDomain { map: "alpha", input: s.to_comma(), class: "Motzkin permutations".into() });
    }
    let word = std::iter::once(1).chain(s.word().iter().rev().map(|&v| v + 1)).collect();
    Permutation::new(word)
}

/// Strips the leading 1, reverses and decrements.
pub fn alpha_inverse(p: &Permutation) -> Result<Permutation> {
    if p.is_empty() {
        return Err(Error::OutOfDomain { map: "alpha-inv", input: String::new(), class: "F(n; 231), n ≥ 1".into() });
    }
    require_member("alpha-inv", p, &class("231"))?;
    let out = Permutation::from_word_unchecked(p.word()[1..].iter().rev().map(|&v| v - 1).collect());
    if !out.is_motzkin() {
        return Err(Error::IdentityFailed(format!("alpha-inv({p}) = {out} is not Motzkin")));
    }
    Ok(out)
}

/// The partitions in F(n; 312) fixed by [`f_312_to_213`], in lexicographic
/// order. These are exactly F(n; 213, 312).
pub fn fixed_points_of_f(n: usize) -> Result<Vec<Permutation>> {
    guard("fixed_points_of_f", n, 1, 16)?;
    let mut out = Vec::new();
    for p in enumerate_avoiding(n, &class("312"))? {
        if f_312_to_213(&p)? == p {
            out.push(p);
        }
    }
    Ok(out)
}

/// The maps, by their command-line names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    F,
    G,
    Swap23,
    H,
    HInverse,
    Alpha,
    AlphaInverse,
}

impl Bijection {
    pub const ALL: [Bijection; 7] = [
        Bijection::F,
        Bijection::G,
        Bijection::Swap23,
        Bijection::H,
        Bijection::HInverse,
        Bijection::Alpha,
        Bijection::AlphaInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::F => "f",
            Bijection::G => "g",
            Bijection::Swap23 => "swap23",
            Bijection::H => "h",
            Bijection::HInverse => "h-inv",
            Bijection::Alpha => "alpha",
            Bijection::AlphaInverse => "alpha-inv",
        }
    }

    pub fn apply(self, p: &Permutation) -> Result<Permutation> {
        match self {
            Bijection::F => f_312_to_213(p),
            Bijection::G => g_213_to_312(p),
            Bijection::Swap23 => swap23(p),
            Bijection::H => h_321(p),
            Bijection::HInverse => h_inverse_321(p),
            Bijection::Alpha => alpha_motzkin(p),
            Bijection::AlphaInverse => alpha_inverse(p),
        }
    }

    pub fn inverse(self) -> Bijection {
        match self {
            Bijection::F => Bijection::G,
            Bijection::G => Bijection::F,
            Bijection::Swap23 => Bijection::Swap23,
            Bijection::H => Bijection::HInverse,
            Bijection::HInverse => Bijection::H,
            Bijection::Alpha => Bijection::AlphaInverse,
            Bijection::AlphaInverse => Bijection::Alpha,
        }
    }

    /// The domain class for flattened size `n`, in lexicographic order.
    pub fn domain(self, n: usize) -> Result<Vec<Permutation>> {
        let flat = |ps: &str| -> Result<Vec<Permutation>> { Ok(enumerate_avoiding(n, &class(ps))?.collect()) };
        let shorter = || n.checked_sub(1).ok_or_else(|| Error::InvalidArgument("n ≥ 1 required".into()));
        match self {
            Bijection::F | Bijection::Swap23 => {
                if self == Bijection::Swap23 && n < 3 {
                    return Err(Error::InvalidArgument("swap23 needs n ≥ 3".into()));
                }
                flat("312")
            }
            Bijection::G => flat("213"),
            Bijection::H => flat("321"),
            Bijection::AlphaInverse => flat("231"),
            Bijection::HInverse => Ok(avoiding_permutations(shorter()?, &class("321"))?.collect()),
            Bijection::Alpha => motzkin_permutations(shorter()?),
        }
    }

    pub fn codomain(self, n: usize) -> Result<Vec<Permutation>> {
        match self {
            Bijection::Swap23 => Bijection::Swap23.domain(n),
            other => other.inverse().domain(n),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown map {s:?}")))
    }
}

/// Every (input, output) pair of a map on one size, with the statistics
/// that agree on each pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionCertificate {
    pub name: String,
    pub n: usize,
    pub pairs: Vec<(Permutation, Permutation)>,
    #[serde(rename = "preserved")]
    pub preserved_statistics: Vec<String>,
}

type Statistic = (&'static str, fn(&Permutation, &Permutation) -> bool);

const STATISTICS: [Statistic; 3] = [
    ("runs", |a, b| a.run_count() == b.run_count()),
    ("run_lengths", |a, b| a.runs().lengths() == b.runs().lengths()),
    ("inversions", |a, b| a.inversions() == b.inversions()),
];

/// Applies `map` to its whole domain at size `n` and checks that the
/// outputs are distinct and fill the codomain exactly.
pub fn certify(map: Bijection, n: usize) -> Result<BijectionCertificate> {
    let domain = map.domain(n)?;
    let pairs = domain.into_iter().map(|p| map.apply(&p).map(|q| (p, q))).collect::<Result<Vec<_>>>()?;
    let image: BTreeSet<&Permutation> = pairs.iter().map(|(_, q)| q).collect();
    if image.len() != pairs.len() {
        return Err(Error::IdentityFailed(format!("{map} is not injective at n = {n}")));
    }
    let codomain = map.codomain(n)?;
    if image.len() != codomain.len() || !codomain.iter().all(|q| image.contains(q)) {
        return Err(Error::IdentityFailed(format!("{map} does not map onto its codomain at n = {n}")));
    }
    let preserved_statistics = STATISTICS
        .iter()
        .filter(|(_, same)| pairs.iter().all(|(p, q)| same(p, q)))
        .map(|(name, _)| name.to_string())
        .collect();
    Ok(BijectionCertificate { name: map.name().to_string(), n, pairs, preserved_statistics })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn f_worked_example() {
        assert_eq!(f_312_to_213(&p("132465")).unwrap(), p("162354"));
        assert_eq!(g_213_to_312(&p("162354")).unwrap(), p("132465"));
        assert_eq!(f_312_to_213(&p("1243")).unwrap(), p("1243"));
        assert_eq!(f_312_to_213(&p("13425")).unwrap(), p("14523"));
    }

    #[test]
    fn identity_is_fixed() {
        for n in 1..=6 {
            let id = Permutation::identity(n);
            assert_eq!(f_312_to_213(&id).unwrap(), id);
            assert_eq!(g_213_to_312(&id).unwrap(), id);
        }
    }

    #[test]
    fn f_on_f5_preserves_run_lengths() {
        let targets: BTreeSet<Permutation> = enumerate_avoiding(5, &class("213")).unwrap().collect();
        let mut seen = BTreeSet::new();
        for x in enumerate_avoiding(5, &class("312")).unwrap() {
            let y = f_312_to_213(&x).unwrap();
            assert!(targets.contains(&y));
            assert_eq!(x.runs().lengths(), y.runs().lengths());
            seen.insert(y);
        }
        assert_eq!(seen, targets);
    }

    #[test]
    fn g_round_trip_n6() {
        let class213: Vec<Permutation> = enumerate_avoiding(6, &class("213")).unwrap().collect();
        assert_eq!(class213.len(), 16);
        for y in class213 {
            assert_eq!(f_312_to_213(&g_213_to_312(&y).unwrap()).unwrap(), y);
        }
    }

    #[test]
    fn f_rejects_out_of_class() {
        assert!(matches!(f_312_to_213(&p("1423")), Err(Error::OutOfDomain { .. })));
        assert!(matches!(g_213_to_312(&p("1324")), Err(Error::OutOfDomain { .. })));
        assert!(matches!(f_312_to_213(&p("213")), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn swap23_cases() {
        assert_eq!(swap23(&p("123")).unwrap(), p("132"));
        assert!(swap23(&p("12")).is_err());
        let all: Vec<Permutation> = enumerate_avoiding(7, &class("312")).unwrap().collect();
        for x in &all {
            assert_eq!(&swap23(&swap23(x).unwrap()).unwrap(), x);
        }
        let six: Vec<Permutation> = enumerate_avoiding(6, &class("312")).unwrap().collect();
        let twelve = six.iter().filter(|x| x.starts_with(&[1, 2])).count();
        let thirteen = six.iter().filter(|x| x.starts_with(&[1, 3])).count();
        assert_eq!((twelve, thirteen), (8, 8));
    }

    #[test]
    fn h_cases() {
        assert_eq!(h_321(&p("1")).unwrap(), Permutation::empty());
        assert_eq!(h_321(&p("12345")).unwrap(), p("1234"));
        assert_eq!(h_inverse_321(&p("231")).unwrap(), p("1342"));
        assert_eq!(h_inverse_321(&Permutation::empty()).unwrap(), p("1"));
        assert!(matches!(h_inverse_321(&p("321")), Err(Error::OutOfDomain { .. })));
        assert!(h_321(&p("1432")).is_err());
        assert!(h_321(&Permutation::empty()).is_err());
    }

    #[test]
    fn h_image_is_s4_321() {
        let image: BTreeSet<Permutation> =
            enumerate_avoiding(5, &class("321")).unwrap().map(|x| h_321(&x).unwrap()).collect();
        let s4: BTreeSet<Permutation> =
            crate::enumerate::all_permutations(4).unwrap().filter(|x| !x.contains(&"321".parse().unwrap())).collect();
        assert_eq!(image, s4);
        assert_eq!(image.len(), 14);
    }

    #[test]
    fn alpha_cases() {
        assert_eq!(alpha_motzkin(&p("21")).unwrap(), p("123"));
        assert_eq!(alpha_motzkin(&p("12")).unwrap(), p("132"));
        assert_eq!(alpha_inverse(&p("123")).unwrap(), p("21"));
        assert_eq!(alpha_inverse(&p("132")).unwrap(), p("12"));
        assert!(matches!(alpha_motzkin(&p("123")), Err(Error::OutOfDomain { .. })));
        assert!(alpha_inverse(&p("1342")).is_err());
    }

    #[test]
    fn fixed_points_small() {
        assert_eq!(fixed_points_of_f(3).unwrap(), vec![p("123"), p("132")]);
        assert_eq!(fixed_points_of_f(5).unwrap().len(), 4);
    }

    #[test]
    fn certificates() {
        let c = certify(Bijection::H, 5).unwrap();
        assert_eq!(c.pairs.len(), 14);
        let c = certify(Bijection::F, 6).unwrap();
        assert!(c.preserved_statistics.contains(&"run_lengths".to_string()));
        assert!(!c.preserved_statistics.contains(&"inversions".to_string()));
        let json = serde_json::to_value(certify(Bijection::Alpha, 3).unwrap()).unwrap();
        assert_eq!(json["name"], "alpha");
        assert_eq!(json["pairs"][0][0], "12");
        assert_eq!(json["pairs"][0][1], "132");
        assert!(json["preserved"].is_array());
        assert!(certify(Bijection::Swap23, 2).is_err());
    }

    #[test]
    fn names_round_trip() {
        for b in Bijection::ALL {
            assert_eq!(b.name().parse::<Bijection>().unwrap(), b);
            assert_eq!(b.inverse().inverse(), b);
        }
        assert!("k".parse::<Bijection>().is_err());
    }
}
