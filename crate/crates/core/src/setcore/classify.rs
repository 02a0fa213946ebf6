use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{kernel, IntSet};
use crate::error::Result;
use crate::structure::{equal_diff_pairs, equal_sum_pairs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetClass {
    SumDominant,
    Balanced,
    DifferenceDominant,
}

impl SetClass {
    pub fn from_sizes(sum_size: usize, diff_size: usize) -> Self {
        match sum_size.cmp(&diff_size) {
            Ordering::Greater => SetClass::SumDominant,
            Ordering::Equal => SetClass::Balanced,
            Ordering::Less => SetClass::DifferenceDominant,
        }
    }

    pub fn is_sum_dominant(self) -> bool {
        self == SetClass::SumDominant
    }
}

impl fmt::Display for SetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetClass::SumDominant => "sum-dominant",
            SetClass::Balanced => "balanced",
            SetClass::DifferenceDominant => "difference-dominant",
        })
    }
}

/// `{first + i·step : 0 <= i < length}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct APSpec {
    pub first: i64,
    pub step: u64,
    pub length: usize,
}

impl APSpec {
    pub fn new(first: i64, step: u64, length: usize) -> Self {
        assert!(step >= 1 && length >= 1, "progression needs step >= 1 and length >= 1");
        Self { first, step, length }
    }

    pub fn last(&self) -> i64 {
        self.first + (self.length as i64 - 1) * self.step as i64
    }

    pub fn to_set(&self) -> IntSet {
        IntSet::new((0..self.length as i64).map(|i| self.first + i * self.step as i64))
    }
}

impl fmt::Display for APSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AP({}, {}, {})", self.first, self.step, self.length)
    }
}

/// Everything the crate knows how to say about a single set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetProfile {
    pub size: usize,
    pub sum_size: usize,
    pub diff_size: usize,
    pub class: SetClass,
    pub equal_sum_pairs: u64,
    pub equal_diff_pairs: u64,
    pub diameter: u64,
    pub symmetry_center: Option<i64>,
    pub ap: Option<APSpec>,
}

pub fn classify(a: &IntSet) -> Result<SetClass> {
    a.require_nonempty()?;
    let e = a.elements();
    Ok(SetClass::from_sizes(kernel::sum_size(e), kernel::diff_size(e)))
}

pub fn profile(a: &IntSet) -> Result<SetProfile> {
    a.require_nonempty()?;
    let e = a.elements();
    let sum_size = kernel::sum_size(e);
    let diff_size = kernel::diff_size(e);
    Ok(SetProfile {
        size: a.len(),
        sum_size,
        diff_size,
        class: SetClass::from_sizes(sum_size, diff_size),
        equal_sum_pairs: equal_sum_pairs(a),
        equal_diff_pairs: equal_diff_pairs(a),
        diameter: a.diameter().unwrap_or(0),
        symmetry_center: is_symmetric(a),
        ap: detect_ap(a),
    })
}

/// Returns `c` with `A = c - A`. Only `c = min + max` can work.
pub fn is_symmetric(a: &IntSet) -> Option<i64> {
    let e = a.elements();
    let c = e.first()? + e.last()?;
    e.iter().zip(e.iter().rev()).all(|(&x, &y)| x + y == c).then_some(c)
}

/// Returns the progression when all consecutive gaps agree. Sets with at
/// most two elements always qualify; a singleton gets step 1.
pub fn detect_ap(a: &IntSet) -> Option<APSpec> {
    let e = a.elements();
    let first = *e.first()?;
    if e.len() == 1 {
        return Some(APSpec::new(first, 1, 1));
    }
    let step = e[1] - e[0];
    e.windows(2)
        .all(|w| w[1] - w[0] == step)
        .then(|| APSpec::new(first, step as u64, e.len()))
}

/// Splits `A` into an arithmetic progression plus at most two extra points.
///
/// Removals are tried by increasing size and, within a size, in
/// lexicographic order of the removed elements, so the witness has the
/// fewest and then the lexicographically smallest extras.
pub fn ap_plus_two_decomposition(a: &IntSet) -> Option<(APSpec, IntSet)> {
    let e = a.elements();
    let n = e.len();
    if n == 0 {
        return None;
    }
    let rest_is_ap = |skip: &[usize]| -> Option<APSpec> {
        let rest = IntSet::new(e.iter().enumerate().filter(|(i, _)| !skip.contains(i)).map(|(_, &x)| x));
        if rest.is_empty() {
            None
        } else {
            detect_ap(&rest)
        }
    };
    if let Some(ap) = rest_is_ap(&[]) {
        return Some((ap, IntSet::empty()));
    }
    for (i, &x) in e.iter().enumerate() {
        if let Some(ap) = rest_is_ap(&[i]) {
            return Some((ap, IntSet::from([x])));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if let Some(ap) = rest_is_ap(&[i, j]) {
                return Some((ap, IntSet::from([e[i], e[j]])));
            }
        }
    }
    None
}

/// Fast test for "an arithmetic progression plus at most two points" on a
/// sorted slice.
///
/// With at least five elements the progression keeps at least two of the
/// first four, and those are its two smallest terms. So the progression is
/// determined by a pair among the first four elements, and it is best to
/// extend it as far as it goes.
pub fn is_ap_plus_at_most_two(e: &[i64]) -> bool {
    let n = e.len();
    if n <= 4 {
        return n > 0;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let (start, step) = (e[i], e[j] - e[i]);
            let mut next = start;
            let mut run = 0;
            for &x in &e[i..] {
                if x == next {
                    run += 1;
                    next += step;
                } else if x > next {
                    break;
                }
            }
            if n - run <= 2 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[i64]) -> IntSet {
        IntSet::new(xs.iter().copied())
    }

    const A1: [i64; 8] = [0, 2, 3, 4, 7, 11, 12, 14];

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&set(&A1)).unwrap(), SetClass::SumDominant);
        assert_eq!(classify(&set(&[0, 1, 2, 4, 5])).unwrap(), SetClass::Balanced);
        assert_eq!(classify(&set(&[0, 1, 3])).unwrap(), SetClass::DifferenceDominant);
        assert!(classify(&IntSet::empty()).is_err());
    }

    #[test]
    fn profile_examples() {
        let p = profile(&set(&[0, 1, 2])).unwrap();
        assert_eq!((p.size, p.sum_size, p.diff_size), (3, 5, 5));
        assert_eq!(p.class, SetClass::Balanced);
        assert_eq!(p.symmetry_center, Some(2));
        assert_eq!(p.ap, Some(APSpec::new(0, 1, 3)));

        let p = profile(&set(&A1)).unwrap();
        assert_eq!((p.size, p.sum_size, p.diff_size), (8, 26, 25));
        assert_eq!(p.class, SetClass::SumDominant);
        assert_eq!(p.symmetry_center, None);
        assert_eq!(p.ap, None);
        assert_eq!(p.diameter, 14);

        let p = profile(&set(&[0, 2, 3, 7, 11, 12, 14])).unwrap();
        assert_eq!(p.symmetry_center, Some(14));
        assert_eq!(p.class, SetClass::Balanced);
    }

    #[test]
    fn profile_json_field_order() {
        let json = serde_json::to_string(&profile(&set(&[0, 1, 2])).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"size":3,"sum_size":5,"diff_size":5,"class":"balanced","equal_sum_pairs":1,"equal_diff_pairs":1,"diameter":2,"symmetry_center":2,"ap":{"first":0,"step":1,"length":3}}"#
        );
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(is_symmetric(&set(&[0, 1, 2, 10, 11, 12])), Some(12));
        assert_eq!(is_symmetric(&set(&[0, 2, 3, 7, 11, 12, 14])), Some(14));
        assert_eq!(is_symmetric(&set(&[0, 1, 3])), None);
        assert_eq!(is_symmetric(&IntSet::empty()), None);
    }

    #[test]
    fn ap_examples() {
        assert_eq!(detect_ap(&set(&[3, 7, 11])), Some(APSpec::new(3, 4, 3)));
        assert_eq!(detect_ap(&set(&[0, 5])), Some(APSpec::new(0, 5, 2)));
        assert_eq!(detect_ap(&set(&[0, 1, 3])), None);
        assert_eq!(detect_ap(&set(&[5])), Some(APSpec::new(5, 1, 1)));
    }

    #[test]
    fn decomposition_examples() {
        let (ap, extra) = ap_plus_two_decomposition(&set(&[0, 1, 2, 3, 10, 20])).unwrap();
        assert_eq!(ap, APSpec::new(0, 1, 4));
        assert_eq!(extra, set(&[10, 20]));

        assert_eq!(ap_plus_two_decomposition(&set(&A1)), None);

        let (ap, extra) = ap_plus_two_decomposition(&set(&[0, 2, 4, 6])).unwrap();
        assert_eq!(ap, APSpec::new(0, 2, 4));
        assert!(extra.is_empty());

        // {0,1,3}: removing 0 leaves {1,3}, the first single removal tried
        let (ap, extra) = ap_plus_two_decomposition(&set(&[0, 1, 3])).unwrap();
        assert_eq!((ap, extra), (APSpec::new(1, 2, 2), set(&[0])));
    }

    #[test]
    fn fast_ap_plus_two_matches_on_fixtures() {
        for xs in [
            &[0, 1, 2, 3, 10, 20][..],
            &A1[..],
            &[0, 2, 4, 6],
            &[0, 1, 3, 7, 15],
            &[0, 5, 6, 7, 8, 100],
            &[-9, 0, 1, 2, 3, 4, 50],
        ] {
            let a = set(xs);
            assert_eq!(
                is_ap_plus_at_most_two(a.elements()),
                ap_plus_two_decomposition(&a).is_some(),
                "{a}"
            );
        }
    }
}
