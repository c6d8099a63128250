//! Rule-based transliteration between the Arabic-based and Latin-based
//! orthographies of Sorani Kurdish.
//!
//! ```
//! use sorani_translit::{transliterate_word_ar2la, transliterate_word_la2ar};
//!
//! assert_eq!(transliterate_word_ar2la("ئاگر"), "agir");
//! assert_eq!(transliterate_word_la2ar("agir"), "ئاگر");
//! ```

pub mod alphabet;
pub mod cli;
pub mod eval;
pub mod exec;
pub mod phonology;
pub mod transliterator;

pub use alphabet::{normalize_abo, AlphabetTable, CharClass, Direction, Orthography};
pub use eval::{evaluate_ar2la, evaluate_la2ar, load_corpus, EvalReport, ParallelCorpus};
pub use exec::Execution;
pub use transliterator::{
    default_engine, transliterate_text, transliterate_word_ar2la, transliterate_word_la2ar, Engine,
    Options, TransliterationResult,
};
