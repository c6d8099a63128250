//! Shared generators and reference implementations for integration tests.
//!
//! Everything here is written from the rules directly and avoids the crate's
//! own phonology code, so it can serve as an oracle.

#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::Rng;

pub const WAW: char = '\u{0648}';
pub const YEH: char = '\u{06CC}';
pub const HAMZA: char = '\u{0626}';

/// Oracle alphabet: one consonant, one vowel, both targets, Hamza and alef.
pub const ORACLE_LETTERS: [char; 6] = ['\u{0628}', '\u{06D5}', WAW, YEH, HAMZA, '\u{0627}'];

pub const LBO_CONSONANTS: &[char] = &[
    'b', 'c', 'ç', 'd', 'f', 'g', 'h', 'ḧ', 'j', 'k', 'l', 'ł', 'm', 'n', 'p', 'q', 'r', 'ř', 's',
    'ş', 't', 'v', 'w', 'x', 'ẍ', 'y', 'z', '\'',
];
pub const LBO_VOWELS: &[char] = &['a', 'e', 'ê', 'i', 'î', 'o', 'u', 'û'];
const ABO_ALWAYS_VOWELS: [char; 4] = ['\u{0627}', '\u{06D5}', '\u{06C6}', '\u{06CE}'];

/// Every word over `alphabet` with length in `1..=max_len`.
pub fn all_words(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        let next: Vec<String> = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |&c| format!("{w}{c}")))
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Literal interpreter of the dual-use detector, run over a word in which
/// both `و` and `ی` are target characters. At each index the target is
/// whatever target letter sits there. Output uses `w/u` and `y/î` for the
/// resolved letters and drops Hamza.
// One branch per rule of the detector, duplicates included.
#[allow(clippy::if_same_then_else)]
pub fn detector_reference(word: &str) -> String {
    let mut w: Vec<char> = word.chars().collect();
    let length = w.len();
    let is_target = |c: char| c == WAW || c == YEH;
    let vowel_form = |t: char| if t == WAW { 'u' } else { 'î' };
    let consonant_form = |t: char| if t == WAW { 'w' } else { 'y' };
    let vowels = [
        'i', 'î', 'u', 'û', '\u{06D5}', '\u{0627}', '\u{06C6}', '\u{06CE}',
    ];

    if length == 1 && is_target(w[0]) {
        return consonant_form(w[0]).to_string();
    }
    let mut index = 0;
    while index < length {
        let next = w.get(index + 1).copied();
        if w[index] == HAMZA && next.is_some_and(is_target) {
            w[index + 1] = vowel_form(next.unwrap());
            index += 1;
        } else if is_target(w[index]) {
            let t = w[index];
            if index == 0 {
                w[index] = consonant_form(t);
            } else if vowels.contains(&w[index - 1]) {
                w[index] = consonant_form(t);
            } else if index + 1 < length {
                if vowels.contains(&w[index + 1]) {
                    w[index] = consonant_form(t);
                } else {
                    w[index] = vowel_form(t);
                }
            } else {
                w[index] = vowel_form(t);
            }
        }
        index += 1;
    }
    w.into_iter().filter(|&c| c != HAMZA).collect()
}

/// Consonant/vowel skeleton used by the brute-force oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cv {
    C,
    V,
}

/// All ways to cut `cv` into syllables of shape V, VC, VCC, CV, CVC, CVCC.
pub fn segmentations(cv: &[Cv]) -> Vec<Vec<usize>> {
    const SHAPES: [&[Cv]; 6] = [
        &[Cv::V],
        &[Cv::V, Cv::C],
        &[Cv::V, Cv::C, Cv::C],
        &[Cv::C, Cv::V],
        &[Cv::C, Cv::V, Cv::C],
        &[Cv::C, Cv::V, Cv::C, Cv::C],
    ];
    if cv.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for shape in SHAPES {
        if cv.starts_with(shape) {
            for mut rest in segmentations(&cv[shape.len()..]) {
                rest.insert(0, shape.len());
                out.push(rest);
            }
        }
    }
    out
}

/// Every assignment of vowel/consonant to the `و`/`ی` letters of an AbO
/// word whose skeleton syllabifies with no two vowels side by side.
///
/// Hamza counts as a consonant. A word-initial bare target is always a
/// consonant and a target right after Hamza is always a vowel, since Hamza
/// only ever carries a vowel. Each assignment lists the roles of the
/// targets in order (`true` = vowel).
pub fn syllabifiable_assignments(word: &str) -> Vec<Vec<bool>> {
    let chars: Vec<char> = word.chars().collect();
    let targets: Vec<usize> = (0..chars.len())
        .filter(|&i| chars[i] == WAW || chars[i] == YEH)
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << targets.len()) {
        let roles: Vec<bool> = (0..targets.len()).map(|k| mask & (1 << k) != 0).collect();
        if targets.first() == Some(&0) && roles[0] {
            continue;
        }
        let after_hamza_consonant = targets
            .iter()
            .zip(&roles)
            .any(|(&t, &v)| t > 0 && chars[t - 1] == HAMZA && !v);
        if after_hamza_consonant {
            continue;
        }
        let cv: Vec<Cv> = chars
            .iter()
            .enumerate()
            .map(|(i, c)| match targets.iter().position(|&t| t == i) {
                Some(k) if roles[k] => Cv::V,
                Some(_) => Cv::C,
                None if ABO_ALWAYS_VOWELS.contains(c) => Cv::V,
                None => Cv::C,
            })
            .collect();
        let touching = cv.windows(2).any(|p| p == [Cv::V, Cv::V]);
        if !touching && !segmentations(&cv).is_empty() {
            out.push(roles);
        }
    }
    out
}

/// Draws a word from the syllable grammar: one to four syllables of shape
/// V, VC, VCC, CV, CVC or CVCC. Onsetless syllables only open the word, so
/// two vowels never touch.
pub fn grammar_word<R: Rng>(rng: &mut R) -> String {
    let syllables = rng.random_range(1..=4);
    let mut word = String::new();
    for s in 0..syllables {
        let onset = s > 0 || rng.random_bool(0.6);
        let coda = rng.random_range(0..=2);
        if onset {
            word.push(*LBO_CONSONANTS.choose(rng).unwrap());
        }
        word.push(*LBO_VOWELS.choose(rng).unwrap());
        for _ in 0..coda {
            word.push(*LBO_CONSONANTS.choose(rng).unwrap());
        }
    }
    word
}

/// The restricted class on which LbO -> AbO -> LbO must be the identity.
///
/// Besides the documented exclusions (Bizroke outside the first syllable,
/// the vowel + `و` + `و` + consonant class) this removes the shapes whose
/// AbO spelling is read back differently by design:
/// * `uw`, which is spelled `وو` and read as `û`;
/// * a glide after a consonant or `û` not followed by `a e ê o`, which is
///   read as the vowel `u` or `î`;
/// * `ûw` not followed by a vowel, whose three waws are read back as `ûu`
///   or `ûwu`;
/// * vowel + `w` + `w`, `u` or `û` + consonant, which is spelled vowel +
///   `و` + `و` + consonant;
/// * a word ending vowel, non-liquid consonant, liquid, which receives a
///   final-syllable Bizroke;
/// * a Bizroke other than between the first two consonants, with a
///   non-glide consonant after it.
pub fn in_round_trip_class(word: &str) -> bool {
    let w: Vec<char> = word.chars().collect();
    let n = w.len();
    let is_vowel = |i: usize| w.get(i).is_some_and(|c| LBO_VOWELS.contains(c));
    let is_consonant = |i: usize| i < n && !is_vowel(i);
    let glide = |i: usize| matches!(w.get(i), Some('w' | 'y'));
    let liquid = |i: usize| matches!(w.get(i), Some('r' | 'ř' | 'l' | 'ł'));

    for i in 0..n {
        if w[i] == 'i' {
            let first_syllable_ok = i == 1 && is_consonant(0) && is_consonant(2) && !glide(2);
            if !first_syllable_ok {
                return false;
            }
        }
        if w[i] == 'u' && w.get(i + 1) == Some(&'w') {
            return false;
        }
        if glide(i)
            && i > 0
            && (is_consonant(i - 1) || w[i - 1] == 'û')
            && !matches!(w.get(i + 1), Some('a' | 'e' | 'ê' | 'o'))
        {
            return false;
        }
        if w[i] == 'û' && w.get(i + 1) == Some(&'w') && !is_vowel(i + 2) {
            return false;
        }
        if is_vowel(i)
            && w.get(i + 1) == Some(&'w')
            && matches!(w.get(i + 2), Some('w' | 'u' | 'û'))
            && is_consonant(i + 3)
        {
            return false;
        }
    }
    let final_liquid =
        n >= 3 && is_vowel(n - 3) && is_consonant(n - 2) && !liquid(n - 2) && liquid(n - 1);
    !final_liquid || w.contains(&'i')
}

/// Whether an LbO word has two vowels side by side.
pub fn has_adjacent_vowels(word: &str) -> bool {
    let w: Vec<char> = word.chars().collect();
    w.windows(2)
        .any(|p| LBO_VOWELS.contains(&p[0]) && LBO_VOWELS.contains(&p[1]))
}

/// Words ending in two dual-use letters and two other consonants, e.g.
/// `ەبییبب`. The detector only looks at neighbours, so it makes the first
/// target a vowel even when that leaves a three-consonant coda.
pub fn local_detector_blind_spot(word: &str) -> bool {
    let c: Vec<char> = word.chars().collect();
    let n = c.len();
    let target = |x: char| x == WAW || x == YEH;
    let plain_consonant = |x: char| !target(x) && !ABO_ALWAYS_VOWELS.contains(&x);
    n >= 4
        && target(c[n - 4])
        && target(c[n - 3])
        && plain_consonant(c[n - 2])
        && plain_consonant(c[n - 1])
}
