use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::pattern::{avoids_all, avoids_thirteen, patterns};
use super::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLabel {
    /// Avoids 132.
    Dominant,
    #[serde(rename = "213-avoiding")]
    Avoids213,
    #[serde(rename = "321-avoiding")]
    Avoids321,
    /// At most one descent.
    Grassmannian,
    /// Avoids 2413 and 3142.
    Separable,
    #[serde(rename = "1324-avoiding")]
    Avoids1324,
    /// Avoids 132 and 312.
    Lowering,
    ThirteenAvoiding,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 8] = [
        ClassLabel::Dominant,
        ClassLabel::Avoids213,
        ClassLabel::Avoids321,
        ClassLabel::Grassmannian,
        ClassLabel::Separable,
        ClassLabel::Avoids1324,
        ClassLabel::Lowering,
        ClassLabel::ThirteenAvoiding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::Dominant => "dominant",
            ClassLabel::Avoids213 => "213-avoiding",
            ClassLabel::Avoids321 => "321-avoiding",
            ClassLabel::Grassmannian => "grassmannian",
            ClassLabel::Separable => "separable",
            ClassLabel::Avoids1324 => "1324-avoiding",
            ClassLabel::Lowering => "lowering",
            ClassLabel::ThirteenAvoiding => "thirteen-avoiding",
        }
    }

    pub fn holds_for(self, w: &Permutation) -> bool {
        let avoid = |ps: &[&str]| avoids_all(w, &patterns(ps));
        match self {
            ClassLabel::Dominant => avoid(&["132"]),
            ClassLabel::Avoids213 => avoid(&["213"]),
            ClassLabel::Avoids321 => avoid(&["321"]),
            ClassLabel::Grassmannian => w.descents().len() <= 1,
            ClassLabel::Separable => avoid(&["2413", "3142"]),
            ClassLabel::Avoids1324 => avoid(&["1324"]),
            ClassLabel::Lowering => avoid(&["132", "312"]),
            ClassLabel::ThirteenAvoiding => avoids_thirteen(w),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify(w: &Permutation) -> BTreeSet<ClassLabel> {
    ClassLabel::ALL
        .into_iter()
        .filter(|l| l.holds_for(w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ClassLabel::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn longest_in_s3() {
        // 321 has a single length-3 pattern (itself), so it avoids 213.
        let expected: BTreeSet<_> = [
            Dominant,
            Avoids213,
            Separable,
            Avoids1324,
            Lowering,
            ThirteenAvoiding,
        ]
        .into();
        assert_eq!(classify(&p("321")), expected);
    }

    #[test]
    fn identity_has_every_label() {
        for n in 1..6 {
            assert_eq!(
                classify(&Permutation::identity(n)).len(),
                ClassLabel::ALL.len()
            );
        }
    }

    #[test]
    fn non_separable() {
        let labels = classify(&p("2413"));
        assert!(!labels.contains(&Separable));
        assert!(labels.contains(&Grassmannian));
    }

    #[test]
    fn dominant_iff_code_nonincreasing() {
        for w in Permutation::all(6) {
            let c = w.code();
            let nonincreasing = c.entries().windows(2).all(|p| p[0] >= p[1]);
            assert_eq!(Dominant.holds_for(&w), nonincreasing, "{w}");
        }
    }

    #[test]
    fn lowering_count_is_power_of_two() {
        for n in 1..=7 {
            let count = Permutation::all(n)
                .filter(|w| Lowering.holds_for(w))
                .count();
            assert_eq!(count, 1 << (n - 1));
        }
    }
}
