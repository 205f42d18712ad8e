//! The funny tensor of two finite categories as a word calculus.
//!
//! Arrows are words of letters `(f, b)` and `(a, g)`, read in the order
//! they are traversed. Two adjacent letters from the same side compose,
//! identity letters delete; normal forms alternate sides and contain no
//! identities.

use std::collections::HashMap;
use std::fmt;

use super::category::{Arrow, FiniteCategory, Functor};
use super::sesquifunctor::Sesquifunctor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `(f, b)`: an arrow of the left category at a fixed right object.
    Left { arrow: usize, fixed: usize },
    /// `(a, g)`: an arrow of the right category at a fixed left object.
    Right { fixed: usize, arrow: usize },
}

/// A composable sequence of letters starting at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub source: (usize, usize),
    pub letters: Vec<Letter>,
}

#[derive(Debug, Clone)]
pub struct FunnyTensor {
    pub left: FiniteCategory,
    pub right: FiniteCategory,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomEnumeration {
    pub words: Vec<Word>,
    /// Longer normal forms exist between the same objects.
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub words_checked: u64,
    pub critical_pairs: u64,
    /// A word with two one-step reducts that normalize differently.
    pub failure: Option<(Word, Word, Word)>,
}

/// Sizes of one hom-set in the funny tensor and in the product, with the
/// pairs of distinct words the comparison functor identifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub funny: usize,
    pub product: usize,
    pub truncated: bool,
    pub surjective: bool,
    pub merged: Vec<(Word, Word)>,
}

impl FunnyTensor {
    pub fn new(left: &FiniteCategory, right: &FiniteCategory) -> Self {
        FunnyTensor { left: left.clone(), right: right.clone() }
    }

    pub fn object_count(&self) -> usize {
        self.left.object_count() * self.right.object_count()
    }

    pub fn object_name(&self, (a, b): (usize, usize)) -> String {
        format!("({},{})", self.left.objects()[a], self.right.objects()[b])
    }

    pub fn letter_ends(&self, l: Letter) -> ((usize, usize), (usize, usize)) {
        match l {
            Letter::Left { arrow, fixed } => ((self.left.src(arrow), fixed), (self.left.tgt(arrow), fixed)),
            Letter::Right { fixed, arrow } => ((fixed, self.right.src(arrow)), (fixed, self.right.tgt(arrow))),
        }
    }

    fn is_identity_letter(&self, l: Letter) -> bool {
        match l {
            Letter::Left { arrow, .. } => self.left.is_identity(arrow),
            Letter::Right { arrow, .. } => self.right.is_identity(arrow),
        }
    }

    /// Every letter, identities included, in a fixed order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for arrow in 0..self.left.arrow_count() {
            for fixed in 0..self.right.object_count() {
                out.push(Letter::Left { arrow, fixed });
            }
        }
        for fixed in 0..self.left.object_count() {
            for arrow in 0..self.right.arrow_count() {
                out.push(Letter::Right { fixed, arrow });
            }
        }
        out
    }

    pub fn target(&self, w: &Word) -> (usize, usize) {
        w.letters.last().map_or(w.source, |&l| self.letter_ends(l).1)
    }

    pub fn is_composable(&self, w: &Word) -> bool {
        let mut at = w.source;
        for &l in &w.letters {
            let (s, t) = self.letter_ends(l);
            if s != at {
                return false;
            }
            at = t;
        }
        true
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        w.letters.iter().all(|&l| !self.is_identity_letter(l))
            && w.letters.windows(2).all(|p| {
                matches!(p, [Letter::Left { .. }, Letter::Right { .. }] | [Letter::Right { .. }, Letter::Left { .. }])
            })
    }

    /// Merges two adjacent letters from the same side.
    fn merge(&self, x: Letter, y: Letter) -> Option<Letter> {
        match (x, y) {
            (Letter::Left { arrow: f, fixed }, Letter::Left { arrow: g, .. }) => {
                Some(Letter::Left { arrow: self.left.compose(g, f)?, fixed })
            }
            (Letter::Right { fixed, arrow: f }, Letter::Right { arrow: g, .. }) => {
                Some(Letter::Right { fixed, arrow: self.right.compose(g, f)? })
            }
            _ => None,
        }
    }

    /// Every one-step rewrite of `w`.
    pub fn rewrites(&self, w: &Word) -> Vec<Word> {
        let mut out = Vec::new();
        for (i, &l) in w.letters.iter().enumerate() {
            if self.is_identity_letter(l) {
                let mut letters = w.letters.clone();
                letters.remove(i);
                out.push(Word { source: w.source, letters });
            }
        }
        for i in 0..w.letters.len().saturating_sub(1) {
            if let Some(m) = self.merge(w.letters[i], w.letters[i + 1]) {
                let mut letters = w.letters.clone();
                letters.splice(i..i + 2, [m]);
                out.push(Word { source: w.source, letters });
            }
        }
        out
    }

    /// Rewrites until no rule applies, always taking the first rewrite.
    pub fn normalize(&self, w: &Word) -> Word {
        let mut w = w.clone();
        while let Some(next) = self.rewrites(&w).into_iter().next() {
            w = next;
        }
        w
    }

    /// `second ∘ first`.
    pub fn compose(&self, second: &Word, first: &Word) -> Option<Word> {
        if self.target(first) != second.source {
            return None;
        }
        let mut letters = first.letters.clone();
        letters.extend_from_slice(&second.letters);
        Some(self.normalize(&Word { source: first.source, letters }))
    }

    /// Normal forms from `src` in order of length, then letters.
    fn normal_words_from(&self, src: (usize, usize), max_len: usize) -> Vec<Word> {
        let nonidentity: Vec<Letter> = self.letters().into_iter().filter(|&l| !self.is_identity_letter(l)).collect();
        let mut out = vec![Word { source: src, letters: vec![] }];
        let mut frontier = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                let at = self.target(w);
                for &l in &nonidentity {
                    let same_side = matches!(
                        (w.letters.last(), l),
                        (Some(Letter::Left { .. }), Letter::Left { .. })
                            | (Some(Letter::Right { .. }), Letter::Right { .. })
                    );
                    if !same_side && self.letter_ends(l).0 == at {
                        let mut letters = w.letters.clone();
                        letters.push(l);
                        next.push(Word { source: src, letters });
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Normal forms `src → tgt` of length at most `max_len`.
    pub fn hom(&self, src: (usize, usize), tgt: (usize, usize), max_len: usize) -> HomEnumeration {
        let words = self.normal_words_from(src, max_len).into_iter().filter(|w| self.target(w) == tgt).collect();
        HomEnumeration { words, truncated: self.longer_words_exist(src, tgt, max_len) }
    }

    /// Whether some normal form `src → tgt` is longer than `max_len`.
    /// States are (object, side of the last letter); a path longer than
    /// `max_len` exists iff one of length in `max_len+1 ..= max_len+states`
    /// does.
    fn longer_words_exist(&self, src: (usize, usize), tgt: (usize, usize), max_len: usize) -> bool {
        let nb = self.right.object_count();
        let states = self.object_count() * 3;
        let code = |(a, b): (usize, usize), side: usize| (a * nb + b) * 3 + side;
        let nonidentity: Vec<Letter> = self.letters().into_iter().filter(|&l| !self.is_identity_letter(l)).collect();
        let mut reach = vec![false; states];
        reach[code(src, 0)] = true;
        for step in 1..=max_len + states {
            let mut next = vec![false; states];
            for &l in &nonidentity {
                let ((s, t), side) = match l {
                    Letter::Left { .. } => (self.letter_ends(l), 1),
                    Letter::Right { .. } => (self.letter_ends(l), 2),
                };
                for prev in 0..3 {
                    if prev != side && reach[code(s, prev)] {
                        next[code(t, side)] = true;
                    }
                }
            }
            if step > max_len && (next[code(tgt, 1)] || next[code(tgt, 2)]) {
                return true;
            }
            reach = next;
        }
        false
    }

    /// Every joinable one-step divergence on composable words of length at
    /// most `max_len`, identity letters included.
    pub fn local_confluence(&self, max_len: usize) -> ConfluenceReport {
        let letters = self.letters();
        let mut report = ConfluenceReport { words_checked: 0, critical_pairs: 0, failure: None };
        let mut frontier: Vec<Word> = (0..self.left.object_count())
            .flat_map(|a| (0..self.right.object_count()).map(move |b| Word { source: (a, b), letters: vec![] }))
            .collect();
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for w in &frontier {
                report.words_checked += 1;
                let steps = self.rewrites(w);
                for i in 0..steps.len() {
                    for j in i + 1..steps.len() {
                        report.critical_pairs += 1;
                        if self.normalize(&steps[i]) != self.normalize(&steps[j]) {
                            report.failure = Some((w.clone(), steps[i].clone(), steps[j].clone()));
                            return report;
                        }
                    }
                }
                let at = self.target(w);
                for &l in &letters {
                    if self.letter_ends(l).0 == at {
                        let mut ls = w.letters.clone();
                        ls.push(l);
                        next.push(Word { source: w.source, letters: ls });
                    }
                }
            }
            frontier = next;
        }
        report
    }

    /// The identity-on-objects functor to the product: a word goes to the
    /// pair of composites of its left and right letters.
    pub fn to_product(&self, w: &Word) -> (usize, usize) {
        let mut f = self.left.identity(w.source.0);
        let mut g = self.right.identity(w.source.1);
        for &l in &w.letters {
            match l {
                Letter::Left { arrow, .. } => f = self.left.compose(arrow, f).expect("composable word"),
                Letter::Right { arrow, .. } => g = self.right.compose(arrow, g).expect("composable word"),
            }
        }
        (f, g)
    }

    pub fn compare_with_product(&self, src: (usize, usize), tgt: (usize, usize), max_len: usize) -> Comparison {
        let hom = self.hom(src, tgt, max_len);
        let product = self.left.hom(src.0, tgt.0).len() * self.right.hom(src.1, tgt.1).len();
        let mut images: HashMap<(usize, usize), Vec<&Word>> = HashMap::new();
        for w in &hom.words {
            images.entry(self.to_product(w)).or_default().push(w);
        }
        let mut merged = Vec::new();
        let mut keys: Vec<_> = images.keys().copied().collect();
        keys.sort_unstable();
        for k in &keys {
            let ws = &images[k];
            for w in &ws[1..] {
                merged.push((ws[0].clone(), (*w).clone()));
            }
        }
        Comparison {
            funny: hom.words.len(),
            product,
            truncated: hom.truncated,
            surjective: images.len() == product,
            merged,
        }
    }

    /// Whether every hom-set is finite, i.e. no normal form is longer than
    /// the number of objects times two.
    pub fn is_finite(&self) -> bool {
        let bound = 2 * self.object_count();
        self.all_objects().iter().all(|&s| self.all_objects().iter().all(|&t| !self.longer_words_exist(s, t, bound)))
    }

    fn all_objects(&self) -> Vec<(usize, usize)> {
        (0..self.left.object_count()).flat_map(|a| (0..self.right.object_count()).map(move |b| (a, b))).collect()
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.letters.is_empty() {
            return format!("id{}", self.object_name(w.source));
        }
        let parts: Vec<String> = w
            .letters
            .iter()
            .map(|&l| match l {
                Letter::Left { arrow, fixed } => {
                    format!("({},{})", self.left.arrow_name(arrow), self.right.objects()[fixed])
                }
                Letter::Right { fixed, arrow } => {
                    format!("({},{})", self.left.objects()[fixed], self.right.arrow_name(arrow))
                }
            })
            .collect();
        parts.join(";")
    }

    /// The funny tensor as a finite category, with its arrows as normal
    /// forms, when every hom-set is finite.
    pub fn to_category(&self) -> Option<(FiniteCategory, Vec<Word>)> {
        if !self.is_finite() {
            return None;
        }
        let bound = 2 * self.object_count();
        let objects = self.all_objects();
        let mut words = Vec::new();
        for &s in &objects {
            words.extend(self.normal_words_from(s, bound));
        }
        // identities first, in object order
        words.sort_by_key(|w| (!w.letters.is_empty(), w.letters.len()));
        let rank: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let nb = self.right.object_count();
        let index = |(a, b): (usize, usize)| a * nb + b;
        let identities: Vec<usize> = objects.iter().map(|&o| rank[&Word { source: o, letters: vec![] }]).collect();
        let arrows: Vec<Arrow> = words
            .iter()
            .map(|w| Arrow { name: self.render_word(w), src: index(w.source), tgt: index(self.target(w)) })
            .collect();
        let cat = FiniteCategory::from_fn(
            format!("{}_box_{}", self.left.name, self.right.name),
            objects.iter().map(|&o| self.object_name(o)).collect(),
            arrows,
            identities,
            |g, f| rank[&self.compose(&words[g], &words[f]).expect("composable")],
        )
        .expect("normal forms compose associatively");
        Some((cat, words))
    }

    /// The universal sesquifunctor into the funny tensor, viewed as a
    /// category: `T(a, g)` and `T(f, b)` are one-letter words.
    pub fn universal_sesquifunctor(&self) -> Option<(FiniteCategory, Sesquifunctor)> {
        let (cat, words) = self.to_category()?;
        let rank: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let (na, nb) = (self.left.object_count(), self.right.object_count());
        let word_of = |source: (usize, usize), l: Letter| {
            let w = Word { source, letters: if self.is_identity_letter(l) { vec![] } else { vec![l] } };
            rank[&w]
        };
        let objects: Vec<Vec<usize>> = (0..na).map(|a| (0..nb).map(|b| a * nb + b).collect()).collect();
        let fix_left = (0..na)
            .map(|a| Functor {
                objects: (0..nb).map(|b| a * nb + b).collect(),
                arrows: (0..self.right.arrow_count())
                    .map(|g| word_of((a, self.right.src(g)), Letter::Right { fixed: a, arrow: g }))
                    .collect(),
            })
            .collect();
        let fix_right = (0..nb)
            .map(|b| Functor {
                objects: (0..na).map(|a| a * nb + b).collect(),
                arrows: (0..self.left.arrow_count())
                    .map(|f| word_of((self.left.src(f), b), Letter::Left { arrow: f, fixed: b }))
                    .collect(),
            })
            .collect();
        Some((cat, Sesquifunctor { objects, fix_left, fix_right }))
    }
}

/// The funny tensor `a □ b`, presented by normal-form words.
pub fn funny_tensor(a: &FiniteCategory, b: &FiniteCategory) -> FunnyTensor {
    FunnyTensor::new(a, b)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}
