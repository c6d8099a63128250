//! Resolution of the ambiguities the AbO leaves open.
//!
//! A normalized AbO word goes through three passes:
//!
//! 1. [`resolve_dual_use`] decides for every `و`/`ی` whether it is a vowel
//!    (`u`/`î`) or a consonant (`w`/`y`) from its neighbours, and drops `ئ`;
//! 2. [`merge_double_waw`] turns a vowel `و` followed by a consonant `و` into
//!    the long vowel `û`;
//! 3. [`insert_bizroke`] restores the unwritten short vowel `i` where the
//!    syllable structure demands it.
//!
//! [`syllabify`] checks a finished word against the syllable shapes of the
//! language and is used for validation and evaluation only.

use std::fmt;

use serde::Serialize;

use crate::alphabet::{
    AlphabetTable, CharClass, Direction, Orthography, HAMZA, LBO_VOWELS, WAW, YEH,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    Vowel,
    Consonant,
    Bizroke,
}

impl Role {
    /// Vowels and Bizroke both carry a syllable.
    pub fn is_nucleus(self) -> bool {
        matches!(self, Role::Vowel | Role::Bizroke)
    }

    pub fn class(self) -> CharClass {
        match self {
            Role::Vowel => CharClass::Vowel,
            Role::Consonant => CharClass::Consonant,
            Role::Bizroke => CharClass::Bizroke,
        }
    }
}

/// One phoneme of a resolved word.
///
/// `ch` is the AbO codepoint the phoneme was read from. The long vowel made
/// from `وو` and an inserted Bizroke have no single AbO codepoint and carry
/// their LbO letter (`û`, `i`) instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Unit {
    pub ch: char,
    pub role: Role,
}

impl Unit {
    pub const fn new(ch: char, role: Role) -> Self {
        Unit { ch, role }
    }

    fn is_glide(self) -> bool {
        self.role == Role::Consonant && matches!(self.ch, WAW | YEH | 'w' | 'y')
    }

    fn is_liquid(self) -> bool {
        self.role == Role::Consonant
            && matches!(
                self.ch,
                '\u{0631}' | '\u{0695}' | '\u{0644}' | '\u{06B5}' | 'r' | 'ř' | 'l' | 'ł'
            )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedWord {
    units: Vec<Unit>,
    source: String,
}

/// Result of rendering a word into the LbO.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Rendered {
    pub text: String,
    /// Characters with no mapping; copied through unchanged.
    pub unmapped: Vec<char>,
}

impl ResolvedWord {
    pub fn new(units: Vec<Unit>, source: impl Into<String>) -> Self {
        ResolvedWord {
            units,
            source: source.into(),
        }
    }

    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    /// The word as it was handed to [`resolve_dual_use`].
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn has_adjacent_vowels(&self) -> bool {
        self.units
            .windows(2)
            .any(|w| w[0].role.is_nucleus() && w[1].role.is_nucleus())
    }

    /// Vowel, `و`, `و`, consonant: `w`+`u`, `w`+`w`+Bizroke and `w`+`û` are
    /// all written this way and nothing in the spelling tells them apart.
    /// Meaningful before [`merge_double_waw`].
    pub fn has_double_waw_ambiguity(&self) -> bool {
        self.units.windows(4).any(|w| {
            w[0].role == Role::Vowel
                && w[1].ch == WAW
                && w[2].ch == WAW
                && w[3].role == Role::Consonant
        })
    }

    pub fn render(&self, table: &AlphabetTable) -> Rendered {
        let mut out = Rendered::default();
        for u in &self.units {
            match table.map_char(u.ch, u.role.class(), Direction::Ar2La) {
                Ok(s) => out.text.push_str(s),
                Err(_) => {
                    out.text.push(u.ch);
                    out.unmapped.push(u.ch);
                }
            }
        }
        out
    }
}

fn is_target(c: char) -> bool {
    c == WAW || c == YEH
}

/// Decides the role of every `و` and `ی` in a normalized AbO word.
///
/// One left-to-right pass over both letters:
///
/// * a word that is just the letter is the consonant;
/// * right after `ئ` it is the vowel;
/// * at the start of the word, or after a vowel, it is the consonant;
/// * otherwise it is the consonant when a vowel follows and the vowel when
///   not.
///
/// "Vowel" on the left includes letters resolved earlier in the same pass;
/// on the right only letters that are always vowels count. `ئ` is dropped.
pub fn resolve_dual_use(word: &str, table: &AlphabetTable) -> ResolvedWord {
    let chars: Vec<char> = word.chars().collect();
    if let [c] = chars[..] {
        if is_target(c) {
            return ResolvedWord::new(vec![Unit::new(c, Role::Consonant)], word);
        }
    }

    let fixed_role = |c: char| match table.classify(c, Orthography::ArabicBased) {
        CharClass::Vowel => Role::Vowel,
        _ => Role::Consonant,
    };

    let mut roles: Vec<Option<Role>> = vec![None; chars.len()];
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == HAMZA {
            if chars.get(i + 1).copied().is_some_and(is_target) {
                roles[i + 1] = Some(Role::Vowel);
                i += 2;
            } else {
                i += 1;
            }
            continue;
        }
        roles[i] = Some(if is_target(c) {
            let prev_vowel = i > 0 && roles[i - 1] == Some(Role::Vowel);
            let next_vowel = chars.get(i + 1).is_some_and(|&n| table.is_abo_vowel(n));
            if i == 0 || prev_vowel || next_vowel {
                Role::Consonant
            } else {
                Role::Vowel
            }
        } else {
            fixed_role(c)
        });
        i += 1;
    }

    let units = chars
        .iter()
        .zip(roles)
        .filter(|(&c, _)| c != HAMZA)
        .map(|(&c, role)| Unit::new(c, role.unwrap_or_else(|| fixed_role(c))))
        .collect();
    ResolvedWord::new(units, word)
}

/// Merges vowel `و` + consonant `و` into `û`. If a vowel follows the `û`, a
/// consonant `w` is put between them, since two vowels never touch.
pub fn merge_double_waw(rw: ResolvedWord) -> ResolvedWord {
    let ResolvedWord { units, source } = rw;
    let mut out = Vec::with_capacity(units.len());
    let mut i = 0;
    while i < units.len() {
        let u = units[i];
        let merges = u == Unit::new(WAW, Role::Vowel)
            && units.get(i + 1) == Some(&Unit::new(WAW, Role::Consonant));
        if !merges {
            out.push(u);
            i += 1;
            continue;
        }
        out.push(Unit::new('û', Role::Vowel));
        i += 2;
        if units.get(i).is_some_and(|n| n.role == Role::Vowel) {
            out.push(Unit::new(WAW, Role::Consonant));
        }
    }
    ResolvedWord::new(out, source)
}

/// Restores at most one Bizroke.
///
/// * A word opening with two consonants gets `i` between them, unless the
///   second is `w` or `y` (`bira`, `bizguř`, but `kwêr`, `dyar`).
/// * Otherwise a word ending in vowel, consonant, liquid gets `i` before the
///   liquid, unless the consonant is itself a liquid (`agir`, `bîwir`).
///
/// Later syllables are left alone, so `kirdin` comes out as `kirdn`.
pub fn insert_bizroke(rw: ResolvedWord) -> ResolvedWord {
    let ResolvedWord { mut units, source } = rw;
    if let Some(at) = bizroke_site(&units) {
        units.insert(at, Unit::new('i', Role::Bizroke));
    }
    ResolvedWord::new(units, source)
}

fn bizroke_site(units: &[Unit]) -> Option<usize> {
    let consonant = |i: usize| units.get(i).is_some_and(|u| u.role == Role::Consonant);
    if consonant(0) && consonant(1) {
        return (!units[1].is_glide()).then_some(1);
    }
    let n = units.len();
    if n >= 3
        && units[n - 3].role == Role::Vowel
        && consonant(n - 2)
        && !units[n - 2].is_liquid()
        && units[n - 1].is_liquid()
    {
        return Some(n - 1);
    }
    None
}

/// Reads an LbO word into units: `i` is Bizroke, the other vowels are
/// vowels, every other letter is a consonant.
pub fn units_from_latin(word: &str) -> Vec<Unit> {
    word.chars()
        .flat_map(char::to_lowercase)
        .map(|c| {
            let role = match c {
                'i' => Role::Bizroke,
                c if LBO_VOWELS.contains(&c) => Role::Vowel,
                _ => Role::Consonant,
            };
            Unit::new(c, role)
        })
        .collect()
}

/// Syllable templates: `V, VC, VCC, CV, CVC, CVCC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    V,
    VC,
    VCC,
    CV,
    CVC,
    CVCC,
}

impl Shape {
    pub const ALL: [Shape; 6] = [
        Shape::V,
        Shape::VC,
        Shape::VCC,
        Shape::CV,
        Shape::CVC,
        Shape::CVCC,
    ];

    pub fn from_parts(onset: usize, coda: usize) -> Option<Shape> {
        Some(match (onset, coda) {
            (0, 0) => Shape::V,
            (0, 1) => Shape::VC,
            (0, 2) => Shape::VCC,
            (1, 0) => Shape::CV,
            (1, 1) => Shape::CVC,
            (1, 2) => Shape::CVCC,
            _ => return None,
        })
    }

    pub fn onset(self) -> usize {
        match self {
            Shape::V | Shape::VC | Shape::VCC => 0,
            _ => 1,
        }
    }

    pub fn coda(self) -> usize {
        match self {
            Shape::V | Shape::CV => 0,
            Shape::VC | Shape::CVC => 1,
            Shape::VCC | Shape::CVCC => 2,
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.onset() + 1 + self.coda()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A syllable as a half-open range of unit indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Syllable {
    pub start: usize,
    pub end: usize,
    pub shape: Shape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoParse {
    NoVowel,
    AdjacentVowels { at: usize },
    Onset { at: usize },
    Coda { at: usize },
}

/// Splits `units` into syllables, giving each vowel one onset consonant when
/// one is available and the rest of a cluster to the preceding coda.
pub fn syllabify(units: &[Unit]) -> Result<Vec<Syllable>, NoParse> {
    let nuclei: Vec<usize> = units
        .iter()
        .enumerate()
        .filter(|(_, u)| u.role.is_nucleus())
        .map(|(i, _)| i)
        .collect();
    let (&first, &last) = match (nuclei.first(), nuclei.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(NoParse::NoVowel),
    };
    if first > 1 {
        return Err(NoParse::Onset { at: 0 });
    }

    let mut syllables = Vec::with_capacity(nuclei.len());
    let mut start = 0;
    for (k, &nucleus) in nuclei.iter().enumerate() {
        let end = match nuclei.get(k + 1) {
            Some(&next) => {
                let cluster = next - nucleus - 1;
                if cluster == 0 {
                    return Err(NoParse::AdjacentVowels { at: nucleus });
                }
                next - 1
            }
            None => units.len(),
        };
        let onset = nucleus - start;
        let coda = end - nucleus - 1;
        let shape = Shape::from_parts(onset, coda).ok_or(NoParse::Coda { at: nucleus + 1 })?;
        syllables.push(Syllable { start, end, shape });
        start = end;
    }
    debug_assert_eq!(syllables.last().map(|s| s.end), Some(units.len()));
    debug_assert!(last < units.len());
    Ok(syllables)
}
