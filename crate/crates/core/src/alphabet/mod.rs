//! Character inventory of the two Sorani orthographies.
//!
//! The Arabic-based orthography (AbO) and the Latin-based orthography (LbO)
//! are almost letter-for-letter equivalent. The exceptions are what make the
//! problem interesting:
//!
//! * `و` and `ی` each stand for a consonant and a vowel (`w`/`u`, `y`/`î`);
//! * LbO `û` is written with two `و` in the AbO;
//! * LbO `i` (Bizroke) is not written at all in the AbO;
//! * `ئ` only marks a word-initial vowel and has no LbO counterpart;
//! * a handful of AbO letters have no LbO letter and are rendered by policy.
//!
//! [`AlphabetTable`] owns all of this as immutable data.

mod overrides;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use overrides::{load_overrides, parse_overrides, OverrideError, OverrideRule};

pub const HAMZA: char = '\u{0626}'; // ئ
pub const WAW: char = '\u{0648}'; // و
pub const YEH: char = '\u{06CC}'; // ی
pub const HEH: char = '\u{0647}'; // ه, always the consonant h
pub const AE: char = '\u{06D5}'; // ە, always the vowel e

pub(crate) const ARABIC_YEH: char = '\u{064A}'; // ي
pub(crate) const ARABIC_KAF: char = '\u{0643}'; // ك
pub(crate) const KEHEH: char = '\u{06A9}'; // ک
pub(crate) const ZWNJ: char = '\u{200C}';
pub(crate) const EN_DASH: char = '\u{2013}';

/// The two writing systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Orthography {
    ArabicBased,
    LatinBased,
}

impl Orthography {
    pub fn other(self) -> Orthography {
        match self {
            Orthography::ArabicBased => Orthography::LatinBased,
            Orthography::LatinBased => Orthography::ArabicBased,
        }
    }
}

/// Direction of a transliteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Arabic-based to Latin-based.
    Ar2La,
    /// Latin-based to Arabic-based.
    La2Ar,
}

impl Direction {
    pub fn source(self) -> Orthography {
        match self {
            Direction::Ar2La => Orthography::ArabicBased,
            Direction::La2Ar => Orthography::LatinBased,
        }
    }

    pub fn target(self) -> Orthography {
        self.source().other()
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Ar2La => "ar2la",
            Direction::La2Ar => "la2ar",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CharClass {
    Vowel,
    Consonant,
    /// AbO `و` and `ی` before their role is resolved.
    DualUse,
    /// AbO `ئ`.
    Auxiliary,
    /// LbO `i`.
    Bizroke,
    /// AbO letters rendered through the policy table.
    NoEquivalent,
    Separator,
    Foreign,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("dual-use character {0:?} reached mapping without a resolved role")]
    UnresolvedDualUse(char),
    #[error("no mapping for {0:?} in {1:?}")]
    Unmapped(char, Direction),
}

/// One row of the mapping table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub abo: String,
    pub lbo: String,
    pub class: CharClass,
}

// One-to-one letters, AbO first.
const CONSONANTS: &[(char, char)] = &[
    ('\u{0628}', 'b'), // ب
    ('\u{067E}', 'p'), // پ
    ('\u{062A}', 't'), // ت
    ('\u{062C}', 'c'), // ج
    ('\u{0686}', 'ç'), // چ
    ('\u{062E}', 'x'), // خ
    ('\u{062F}', 'd'), // د
    ('\u{0631}', 'r'), // ر
    ('\u{0695}', 'ř'), // ڕ
    ('\u{0632}', 'z'), // ز
    ('\u{0698}', 'j'), // ژ
    ('\u{0633}', 's'), // س
    ('\u{0634}', 'ş'), // ش
    ('\u{0641}', 'f'), // ف
    ('\u{06A4}', 'v'), // ڤ
    ('\u{0642}', 'q'), // ق
    ('\u{06A9}', 'k'), // ک
    ('\u{06AF}', 'g'), // گ
    ('\u{0644}', 'l'), // ل
    ('\u{06B5}', 'ł'), // ڵ
    ('\u{0645}', 'm'), // م
    ('\u{0646}', 'n'), // ن
    ('\u{0647}', 'h'), // ه
];

const VOWELS: &[(char, char)] = &[
    ('\u{0627}', 'a'), // ا
    ('\u{06D5}', 'e'), // ە
    ('\u{06C6}', 'o'), // ۆ
    ('\u{06CE}', 'ê'), // ێ
];

// Letters without an LbO equivalent. These three round-trip.
const NO_EQUIVALENT: &[(char, &str)] = &[
    ('\u{062D}', "ḧ"), // ح
    ('\u{063A}', "ẍ"), // غ
    ('\u{0639}', "'"), // ع
];

// Arabic loan letters folded onto the nearest Kurdish letter. One-way.
const LOAN_LETTERS: &[(char, &str)] = &[
    ('\u{062B}', "s"), // ث
    ('\u{0630}', "z"), // ذ
    ('\u{0635}', "s"), // ص
    ('\u{0636}', "z"), // ض
    ('\u{0637}', "t"), // ط
    ('\u{0638}', "z"), // ظ
    ('\u{0629}', "e"), // ة
    ('\u{0622}', "a"), // آ
    ('\u{0623}', "a"), // أ
    ('\u{0625}', "î"), // إ
];

/// LbO vowels, including Bizroke.
pub const LBO_VOWELS: [char; 8] = ['a', 'e', 'ê', 'i', 'î', 'o', 'u', 'û'];
/// AbO letters that are always vowels.
pub const ABO_VOWELS: [char; 4] = ['\u{0627}', '\u{06D5}', '\u{06C6}', '\u{06CE}'];

pub(crate) const ARABIC_PUNCT: &[(char, char)] = &[
    ('\u{060C}', ','), // ،
    ('\u{061F}', '?'), // ؟
    ('\u{061B}', ';'), // ؛
];

#[derive(Debug, Clone)]
struct Rendering {
    class: CharClass,
    text: String,
}

/// Bidirectional mapping table plus character classification.
///
/// Immutable once built; share it freely between threads.
#[derive(Debug, Clone)]
pub struct AlphabetTable {
    entries: Vec<Entry>,
    abo: HashMap<char, Rendering>,
    lbo: HashMap<char, Rendering>,
}

impl Default for AlphabetTable {
    fn default() -> Self {
        Self::new()
    }
}

impl AlphabetTable {
    pub fn new() -> Self {
        let mut entries = Vec::new();
        for &(a, l) in CONSONANTS {
            entries.push(Entry {
                abo: a.into(),
                lbo: l.into(),
                class: CharClass::Consonant,
            });
        }
        for &(a, l) in VOWELS {
            entries.push(Entry {
                abo: a.into(),
                lbo: l.into(),
                class: CharClass::Vowel,
            });
        }
        for (a, l) in [(WAW, "w"), (WAW, "u"), (YEH, "y"), (YEH, "î")] {
            entries.push(Entry {
                abo: a.into(),
                lbo: l.into(),
                class: CharClass::DualUse,
            });
        }
        entries.push(Entry {
            abo: "\u{0648}\u{0648}".into(),
            lbo: "û".into(),
            class: CharClass::Vowel,
        });
        entries.push(Entry {
            abo: String::new(),
            lbo: "i".into(),
            class: CharClass::Bizroke,
        });
        entries.push(Entry {
            abo: HAMZA.into(),
            lbo: String::new(),
            class: CharClass::Auxiliary,
        });
        for &(a, l) in NO_EQUIVALENT.iter().chain(LOAN_LETTERS) {
            entries.push(Entry {
                abo: a.into(),
                lbo: l.into(),
                class: CharClass::NoEquivalent,
            });
        }

        let mut abo = HashMap::new();
        let mut lbo = HashMap::new();
        for e in &entries {
            let a = single(&e.abo);
            let l = single(&e.lbo);
            match e.class {
                CharClass::Consonant | CharClass::Vowel if a.is_some() => {
                    let (a, l) = (a.unwrap(), l.unwrap());
                    abo.insert(a, rendering(e.class, l));
                    lbo.insert(l, rendering(e.class, a));
                }
                CharClass::DualUse => {
                    let (a, l) = (a.unwrap(), l.unwrap());
                    abo.insert(a, rendering(CharClass::DualUse, ""));
                    let class = if matches!(l, 'u' | 'î') {
                        CharClass::Vowel
                    } else {
                        CharClass::Consonant
                    };
                    lbo.insert(l, rendering(class, a));
                }
                CharClass::Vowel => {
                    // û
                    lbo.insert('û', rendering(CharClass::Vowel, &e.abo));
                }
                CharClass::Bizroke => {
                    lbo.insert('i', rendering(CharClass::Bizroke, ""));
                }
                CharClass::Auxiliary => {
                    abo.insert(HAMZA, rendering(CharClass::Auxiliary, ""));
                }
                CharClass::NoEquivalent => {
                    let a = a.unwrap();
                    abo.insert(a, rendering(CharClass::NoEquivalent, &e.lbo));
                }
                _ => unreachable!("table rows are built above"),
            }
        }
        for &(a, l) in NO_EQUIVALENT {
            let l = single(l).expect("policy rows are single letters");
            lbo.insert(l, rendering(CharClass::Consonant, a));
        }

        AlphabetTable { entries, abo, lbo }
    }

    /// Builds the default table with `rules` applied in order.
    ///
    /// A rule whose source is an Arabic-script character changes how that
    /// character is written in the LbO; any other source changes the AbO
    /// rendering of an LbO letter. The dual-use letters, Hamza and the LbO
    /// letters whose mapping is structural (`i u w y î û`) cannot be
    /// overridden.
    pub fn with_overrides(rules: &[OverrideRule]) -> Result<Self, OverrideError> {
        let mut table = Self::new();
        for rule in rules {
            table.apply(rule)?;
        }
        Ok(table)
    }

    fn apply(&mut self, rule: &OverrideRule) -> Result<(), OverrideError> {
        let c = rule.source;
        if is_arabic_script(c) {
            let c = fold_confusable(c);
            if matches!(c, WAW | YEH | HAMZA) {
                return Err(OverrideError::Protected {
                    line: rule.line,
                    ch: c,
                });
            }
            let class = match self.abo.get(&c) {
                Some(r) => r.class,
                None => CharClass::NoEquivalent,
            };
            self.abo.insert(c, rendering(class, &rule.target));
            self.entries.retain(|e| single(&e.abo) != Some(c));
            self.entries.push(Entry {
                abo: c.into(),
                lbo: rule.target.clone(),
                class,
            });
        } else {
            let c = lower(c).ok_or(OverrideError::Protected {
                line: rule.line,
                ch: c,
            })?;
            if matches!(c, 'i' | 'u' | 'w' | 'y' | 'î' | 'û') {
                return Err(OverrideError::Protected {
                    line: rule.line,
                    ch: c,
                });
            }
            let class = match self.lbo.get(&c) {
                Some(r) => r.class,
                None => CharClass::Consonant,
            };
            self.lbo.insert(c, rendering(class, &rule.target));
        }
        Ok(())
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Classifies `c` as a character of orthography `o`.
    ///
    /// AbO input is expected to be normalized, but the two confusables fixed
    /// by [`normalize_abo`] are classified as their normalized forms.
    pub fn classify(&self, c: char, o: Orthography) -> CharClass {
        let found = match o {
            Orthography::ArabicBased => self.abo.get(&fold_confusable(c)),
            Orthography::LatinBased => lower(c).and_then(|l| self.lbo.get(&l)),
        };
        if let Some(r) = found {
            return r.class;
        }
        if is_separator(c) {
            CharClass::Separator
        } else {
            CharClass::Foreign
        }
    }

    /// True for characters that can appear inside a word of `o`.
    pub fn is_letter(&self, c: char, o: Orthography) -> bool {
        !matches!(
            self.classify(c, o),
            CharClass::Separator | CharClass::Foreign
        )
    }

    /// Renders one character in the target orthography of `direction`.
    ///
    /// For AbO `و`/`ی` the role decides the rendering and must be `Vowel` or
    /// `Consonant`. The phonology layer also produces units for the two LbO
    /// letters that have no single-codepoint AbO form, `û` and Bizroke `i`;
    /// in the AbO→LbO direction those render as themselves.
    pub fn map_char(
        &self,
        c: char,
        role: CharClass,
        direction: Direction,
    ) -> Result<&str, AlphabetError> {
        match direction {
            Direction::Ar2La => {
                let c = fold_confusable(c);
                match (c, role) {
                    (WAW, CharClass::Vowel) => return Ok("u"),
                    (WAW, CharClass::Consonant) => return Ok("w"),
                    (YEH, CharClass::Vowel) => return Ok("î"),
                    (YEH, CharClass::Consonant) => return Ok("y"),
                    (WAW | YEH, _) => return Err(AlphabetError::UnresolvedDualUse(c)),
                    ('û', _) => return Ok("û"),
                    ('i', _) => return Ok("i"),
                    _ => {}
                }
                self.abo
                    .get(&c)
                    .map(|r| r.text.as_str())
                    .ok_or(AlphabetError::Unmapped(c, direction))
            }
            Direction::La2Ar => lower(c)
                .and_then(|l| self.lbo.get(&l))
                .map(|r| r.text.as_str())
                .ok_or(AlphabetError::Unmapped(c, direction)),
        }
    }

    pub fn is_abo_vowel(&self, c: char) -> bool {
        ABO_VOWELS.contains(&c)
    }
}

fn rendering(class: CharClass, text: impl Into<String>) -> Rendering {
    Rendering {
        class,
        text: text.into(),
    }
}

fn single(s: &str) -> Option<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

/// Single-codepoint lowercase, or `None` if lowercasing expands.
pub(crate) fn lower(c: char) -> Option<char> {
    let mut it = c.to_lowercase();
    match (it.next(), it.next()) {
        (Some(l), None) => Some(l),
        _ => None,
    }
}

pub(crate) fn fold_confusable(c: char) -> char {
    match c {
        ARABIC_YEH => YEH,
        ARABIC_KAF => KEHEH,
        _ => c,
    }
}

pub(crate) fn is_arabic_script(c: char) -> bool {
    matches!(c,
        '\u{0600}'..='\u{06FF}'
        | '\u{0750}'..='\u{077F}'
        | '\u{FB50}'..='\u{FDFF}'
        | '\u{FE70}'..='\u{FEFF}')
}

/// Value of an ASCII, Arabic-Indic or extended Arabic-Indic digit.
pub(crate) fn digit_value(c: char) -> Option<u32> {
    match c {
        '0'..='9' => Some(c as u32 - '0' as u32),
        '\u{0660}'..='\u{0669}' => Some(c as u32 - 0x0660),
        '\u{06F0}'..='\u{06F9}' => Some(c as u32 - 0x06F0),
        _ => None,
    }
}

/// Whitespace, digits and punctuation.
pub fn is_separator(c: char) -> bool {
    if c.is_whitespace() || digit_value(c).is_some() {
        return true;
    }
    if c.is_ascii_punctuation() {
        return true;
    }
    matches!(c,
        '\u{00A1}' | '\u{00AB}' | '\u{00B7}' | '\u{00BB}' | '\u{00BF}'
        | '\u{060C}' | '\u{061B}' | '\u{061F}' | '\u{066A}'..='\u{066D}' | '\u{06D4}'
        | '\u{FD3E}' | '\u{FD3F}'
        | '\u{2010}'..='\u{205E}'
        | '\u{200B}' | '\u{200C}' | '\u{200D}' | '\u{FEFF}')
}

/// Folds the AbO input onto the Kurdish codepoints.
///
/// * `ي` (U+064A) becomes `ی` (U+06CC) and `ك` (U+0643) becomes `ک` (U+06A9);
/// * zero-width non-joiners are removed;
/// * an en dash directly after a word-final `ه` is the "this is h" marker and
///   is removed. `ه` itself always reads as h, so no further tagging is
///   needed; `ە` stays the vowel e.
///
/// Everything else passes through. The result never gets longer and
/// normalizing twice changes nothing.
pub fn normalize_abo(text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut last: Option<char> = None;
    for (i, &c) in chars.iter().enumerate() {
        let c = fold_confusable(c);
        match c {
            ZWNJ => continue,
            EN_DASH if last == Some(HEH) && !letter_follows(&chars[i + 1..]) => continue,
            _ => {}
        }
        out.push(c);
        last = Some(c);
    }
    out
}

fn letter_follows(rest: &[char]) -> bool {
    rest.iter()
        .find(|&&c| c != ZWNJ && c != EN_DASH)
        .is_some_and(|&c| is_abo_letter(c))
}

fn is_abo_letter(c: char) -> bool {
    let c = fold_confusable(c);
    matches!(c, WAW | YEH | HAMZA)
        || CONSONANTS.iter().any(|&(a, _)| a == c)
        || VOWELS.iter().any(|&(a, _)| a == c)
        || NO_EQUIVALENT
            .iter()
            .chain(LOAN_LETTERS)
            .any(|&(a, _)| a == c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn normalizes_confusables() {
        assert_eq!(
            normalize_abo("\u{064A}\u{06D5}\u{0643}"),
            "\u{06CC}\u{06D5}\u{06A9}"
        );
        assert_eq!(normalize_abo(""), "");
    }

    #[test]
    fn strips_h_markers() {
        // بەهبەه with ZWNJ and with en dash after the final ه
        let bare = "\u{0628}\u{06D5}\u{0647}\u{0628}\u{06D5}\u{0647}";
        assert_eq!(normalize_abo(&format!("{bare}\u{200C}")), bare);
        assert_eq!(
            normalize_abo(&format!("{bare}\u{2013} x")),
            format!("{bare} x")
        );
        // a dash between words is punctuation
        assert_eq!(
            normalize_abo("\u{0647}\u{2013}\u{0628}"),
            "\u{0647}\u{2013}\u{0628}"
        );
        assert_eq!(normalize_abo("\u{0627} \u{2013} "), "\u{0627} \u{2013} ");
    }

    #[test]
    fn classifies() {
        let t = AlphabetTable::new();
        assert_eq!(
            t.classify(WAW, Orthography::ArabicBased),
            CharClass::DualUse
        );
        assert_eq!(
            t.classify(YEH, Orthography::ArabicBased),
            CharClass::DualUse
        );
        assert_eq!(
            t.classify(HAMZA, Orthography::ArabicBased),
            CharClass::Auxiliary
        );
        assert_eq!(t.classify('a', Orthography::LatinBased), CharClass::Vowel);
        assert_eq!(
            t.classify('b', Orthography::LatinBased),
            CharClass::Consonant
        );
        assert_eq!(
            t.classify('B', Orthography::LatinBased),
            CharClass::Consonant
        );
        assert_eq!(t.classify('i', Orthography::LatinBased), CharClass::Bizroke);
        assert_eq!(
            t.classify('\u{062D}', Orthography::ArabicBased),
            CharClass::NoEquivalent
        );
        assert_eq!(
            t.classify(' ', Orthography::LatinBased),
            CharClass::Separator
        );
        assert_eq!(
            t.classify('\u{06F3}', Orthography::ArabicBased),
            CharClass::Separator
        );
        assert_eq!(
            t.classify('\u{061F}', Orthography::ArabicBased),
            CharClass::Separator
        );
        assert_eq!(t.classify('ô', Orthography::LatinBased), CharClass::Foreign);
        assert_eq!(
            t.classify('b', Orthography::ArabicBased),
            CharClass::Foreign
        );
        assert_eq!(
            t.classify('\u{0628}', Orthography::LatinBased),
            CharClass::Foreign
        );
    }

    #[test]
    fn lbo_never_dual_use() {
        let t = AlphabetTable::new();
        for c in (0u32..0x3000).filter_map(char::from_u32) {
            assert_ne!(
                t.classify(c, Orthography::LatinBased),
                CharClass::DualUse,
                "{c:?}"
            );
        }
    }

    #[test]
    fn maps_single_chars() {
        let t = AlphabetTable::new();
        assert_eq!(
            t.map_char('ç', CharClass::Consonant, Direction::La2Ar),
            Ok("\u{0686}")
        );
        assert_eq!(
            t.map_char('û', CharClass::Vowel, Direction::La2Ar),
            Ok("\u{0648}\u{0648}")
        );
        assert_eq!(
            t.map_char('i', CharClass::Bizroke, Direction::La2Ar),
            Ok("")
        );
        assert_eq!(t.map_char(WAW, CharClass::Vowel, Direction::Ar2La), Ok("u"));
        assert_eq!(
            t.map_char(YEH, CharClass::Consonant, Direction::Ar2La),
            Ok("y")
        );
        assert_eq!(
            t.map_char('\u{062D}', CharClass::NoEquivalent, Direction::Ar2La),
            Ok("ḧ")
        );
        assert_eq!(
            t.map_char('ḧ', CharClass::Consonant, Direction::La2Ar),
            Ok("\u{062D}")
        );
        assert_eq!(
            t.map_char(WAW, CharClass::DualUse, Direction::Ar2La),
            Err(AlphabetError::UnresolvedDualUse(WAW))
        );
        assert!(matches!(
            t.map_char('ô', CharClass::Foreign, Direction::La2Ar),
            Err(AlphabetError::Unmapped('ô', Direction::La2Ar))
        ));
    }

    #[test]
    fn one_to_one_rows_are_a_bijection() {
        let t = AlphabetTable::new();
        let rows: Vec<(char, char, CharClass)> = t
            .entries()
            .iter()
            .filter(|e| matches!(e.class, CharClass::Consonant | CharClass::Vowel))
            .filter_map(|e| Some((single(&e.abo)?, single(&e.lbo)?, e.class)))
            .collect();
        assert_eq!(rows.len(), 27);
        let abo: HashSet<char> = rows.iter().map(|r| r.0).collect();
        let lbo: HashSet<char> = rows.iter().map(|r| r.1).collect();
        assert_eq!(abo.len(), rows.len());
        assert_eq!(lbo.len(), rows.len());
        for (a, l, class) in rows {
            let there = t.map_char(a, class, Direction::Ar2La).unwrap();
            assert_eq!(there, l.to_string());
            let back = t.map_char(l, class, Direction::La2Ar).unwrap();
            assert_eq!(back, a.to_string());
        }
    }

    #[test]
    fn lbo_inventory() {
        let t = AlphabetTable::new();
        let letters: HashSet<char> = t
            .entries()
            .iter()
            .filter(|e| e.class != CharClass::NoEquivalent)
            .flat_map(|e| e.lbo.chars())
            .collect();
        let expected: HashSet<char> = "abcçdeêfghiîjklłmnopqrřsştuûvwxyz".chars().collect();
        assert_eq!(letters, expected);
    }

    #[test]
    fn overrides_shadow_defaults() {
        let rules =
            parse_overrides("\u{062B}\tth\n# comment\n\u{062B}\tt\nç\t\u{0686}\u{0686}\n").unwrap();
        let t = AlphabetTable::with_overrides(&rules).unwrap();
        assert_eq!(
            t.map_char('\u{062B}', CharClass::NoEquivalent, Direction::Ar2La),
            Ok("t")
        );
        assert_eq!(
            t.map_char('ç', CharClass::Consonant, Direction::La2Ar),
            Ok("\u{0686}\u{0686}")
        );
        let rules = parse_overrides("\u{0648}\tw\n").unwrap();
        assert!(matches!(
            AlphabetTable::with_overrides(&rules),
            Err(OverrideError::Protected { line: 1, .. })
        ));
    }

    #[test]
    fn override_adds_new_letter() {
        let rules = parse_overrides("U+0686 U+0686\tdrop-me\n\u{06BE}\th\n").unwrap_err();
        assert!(matches!(
            rules,
            OverrideError::MultiCodepointSource { line: 1 }
        ));
        // ھ (heh doachashmee) is unknown by default
        let t = AlphabetTable::new();
        assert_eq!(
            t.classify('\u{06BE}', Orthography::ArabicBased),
            CharClass::Foreign
        );
        let rules = parse_overrides("\u{06BE}\th\n").unwrap();
        let t = AlphabetTable::with_overrides(&rules).unwrap();
        assert_eq!(
            t.classify('\u{06BE}', Orthography::ArabicBased),
            CharClass::NoEquivalent
        );
        assert_eq!(
            t.map_char('\u{06BE}', CharClass::NoEquivalent, Direction::Ar2La),
            Ok("h")
        );
    }
}
