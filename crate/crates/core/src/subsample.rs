//! Class-balanced random subsampling.
//!
//! Each label class keeps `floor(fraction * class_count + 1/2)` samples drawn
//! uniformly without replacement. Every class has its own generator seeded by
//! `(seed, label)`, so growing one class never changes the selection in
//! another. Selected samples keep their original relative order.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::corpus::{Dataset, Label};

/// Exact fraction in `(0, 1]`, parsed from `0.01`, `1`, `.5` or `1/100`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    numerator: u64,
    denominator: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubsampleError {
    #[error("cannot subsample an empty dataset")]
    EmptyDataset,
    #[error("invalid fraction `{0}`: expected a number in (0, 1]")]
    BadFraction(String),
}

impl Fraction {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self, SubsampleError> {
        if numerator == 0 || denominator == 0 || numerator > denominator {
            return Err(SubsampleError::BadFraction(format!("{numerator}/{denominator}")));
        }
        Ok(Fraction { numerator, denominator })
    }

    pub const ONE: Fraction = Fraction { numerator: 1, denominator: 1 };

    /// `floor(self * count + 1/2)`.
    pub fn round_share(self, count: usize) -> usize {
        let (n, d, c) = (self.numerator as u128, self.denominator as u128, count as u128);
        ((2 * n * c + d) / (2 * d)) as usize
    }

    pub fn as_f64(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl FromStr for Fraction {
    type Err = SubsampleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SubsampleError::BadFraction(s.to_owned());
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num = num.trim().parse().map_err(|_| bad())?;
            let den = den.trim().parse().map_err(|_| bad())?;
            return Fraction::new(num, den).map_err(|_| bad());
        }

        let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
        let digits_ok = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if (int_part.is_empty() && frac_part.is_empty())
            || !digits_ok(int_part)
            || !digits_ok(frac_part)
            || frac_part.len() > 18
        {
            return Err(bad());
        }
        let denominator = 10u64.pow(frac_part.len() as u32);
        let int: u64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| bad())? };
        let frac: u64 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| bad())? };
        let numerator = int
            .checked_mul(denominator)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(bad)?;
        Fraction::new(numerator, denominator).map_err(|_| bad())
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsampleConfig {
    pub fraction: Fraction,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSelection {
    pub label: Label,
    pub available: usize,
    pub selected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsample {
    pub dataset: Dataset,
    pub classes: Vec<ClassSelection>,
    /// Classes present in the input that round to zero samples.
    pub warnings: Vec<String>,
}

fn class_rng(seed: u64, label: Label) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    let tag = label.as_str().as_bytes();
    key[8..8 + tag.len()].copy_from_slice(tag);
    ChaCha8Rng::from_seed(key)
}

pub fn class_balanced_subsample(
    dataset: &Dataset,
    config: SubsampleConfig,
) -> Result<Subsample, SubsampleError> {
    if dataset.is_empty() {
        return Err(SubsampleError::EmptyDataset);
    }

    let mut keep = vec![false; dataset.len()];
    let mut classes = Vec::new();
    let mut warnings = Vec::new();

    for label in Label::ALL {
        let members: Vec<usize> = dataset
            .iter()
            .enumerate()
            .filter(|(_, s)| s.label == label)
            .map(|(i, _)| i)
            .collect();
        if members.is_empty() {
            continue;
        }
        let target = config.fraction.round_share(members.len());
        if target == 0 {
            warnings.push(format!(
                "class {label} ({} samples) rounds to 0 at fraction {}",
                members.len(),
                config.fraction
            ));
        }
        let mut rng = class_rng(config.seed, label);
        for pick in rand::seq::index::sample(&mut rng, members.len(), target) {
            keep[members[pick]] = true;
        }
        classes.push(ClassSelection { label, available: members.len(), selected: target });
    }

    let samples = dataset
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(s, _)| s.clone())
        .collect();
    Ok(Subsample { dataset: Dataset::new(samples), classes, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Sample;

    fn dataset(counts: [usize; 3]) -> Dataset {
        let mut samples = Vec::new();
        let mut n = 0;
        // interleave classes so order preservation is observable
        let max = *counts.iter().max().unwrap();
        for i in 0..max {
            for (label, &count) in Label::ALL.iter().zip(&counts) {
                if i < count {
                    samples.push(Sample::original(format!("s{n}"), "c", "e", *label));
                    n += 1;
                }
            }
        }
        Dataset::new(samples)
    }

    fn config(fraction: &str, seed: u64) -> SubsampleConfig {
        SubsampleConfig { fraction: fraction.parse().unwrap(), seed }
    }

    #[test]
    fn fraction_parsing() {
        assert_eq!("0.01".parse::<Fraction>().unwrap(), Fraction::new(1, 100).unwrap());
        assert_eq!("1".parse::<Fraction>().unwrap(), Fraction::ONE);
        assert_eq!("1.0".parse::<Fraction>().unwrap(), Fraction::new(10, 10).unwrap());
        assert_eq!(".5".parse::<Fraction>().unwrap(), Fraction::new(5, 10).unwrap());
        assert_eq!("3/4".parse::<Fraction>().unwrap(), Fraction::new(3, 4).unwrap());
        for bad in ["0", "0.0", "1.5", "-0.1", "abc", "", ".", "2/1", "1/0", "1e-2"] {
            assert!(bad.parse::<Fraction>().is_err(), "{bad}");
        }
    }

    #[test]
    fn rounding_rule() {
        let f = Fraction::new(1, 10).unwrap();
        assert_eq!(f.round_share(100), 10);
        assert_eq!(f.round_share(105), 11); // 10.5 rounds up
        assert_eq!(f.round_share(104), 10);
        assert_eq!(Fraction::new(1, 100).unwrap().round_share(80_900), 809);
    }

    #[test]
    fn identity_fraction() {
        let ds = dataset([5, 3, 7]);
        let out = class_balanced_subsample(&ds, config("1.0", 9)).unwrap();
        assert_eq!(out.dataset, ds);
    }

    #[test]
    fn balanced_tenth() {
        let ds = dataset([100, 100, 100]);
        for seed in 0..5 {
            let out = class_balanced_subsample(&ds, config("0.1", seed)).unwrap();
            assert_eq!(out.dataset.len(), 30);
            for label in Label::ALL {
                assert_eq!(out.dataset.iter().filter(|s| s.label == label).count(), 10);
            }
        }
    }

    #[test]
    fn seeds_differ_and_repeat() {
        let ds = dataset([100, 100, 100]);
        let a = class_balanced_subsample(&ds, config("0.1", 1)).unwrap();
        let b = class_balanced_subsample(&ds, config("0.1", 1)).unwrap();
        let c = class_balanced_subsample(&ds, config("0.1", 2)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.dataset, c.dataset);
    }

    #[test]
    fn per_class_seeding_is_independent() {
        let small = dataset([50, 50, 50]);
        let mut bigger = small.clone();
        for i in 0..40 {
            bigger.samples.push(Sample::original(format!("extra{i}"), "c", "e", Label::Nei));
        }
        let a = class_balanced_subsample(&small, config("0.2", 7)).unwrap();
        let b = class_balanced_subsample(&bigger, config("0.2", 7)).unwrap();
        let sup = |d: &Dataset| {
            d.iter().filter(|s| s.label == Label::Sup).map(|s| s.id.clone()).collect::<Vec<_>>()
        };
        assert_eq!(sup(&a.dataset), sup(&b.dataset));
    }

    #[test]
    fn tiny_fraction_warns() {
        let ds = dataset([3, 3, 300]);
        let out = class_balanced_subsample(&ds, config("0.01", 0)).unwrap();
        assert_eq!(out.warnings.len(), 2);
        assert_eq!(out.dataset.len(), 3);
    }

    #[test]
    fn empty_dataset_errors() {
        assert_eq!(
            class_balanced_subsample(&Dataset::default(), config("0.5", 0)),
            Err(SubsampleError::EmptyDataset)
        );
    }
}
