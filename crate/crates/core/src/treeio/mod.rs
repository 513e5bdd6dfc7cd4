//! Readers and writers for the three on-disk formats, plus the diagnostics
//! type used across the pipeline.
//!
//! * bracketed constituent trees ([`parse_tree`], [`serialize_tree`],
//!   [`TreebankReader`]),
//! * eojeol morphological-analysis files ([`parse_morph_line`],
//!   [`MorphReader`]),
//! * CoNLL-X dependency files ([`write_conll`], [`from_conll`],
//!   [`ConllReader`], [`ConllWriter`]).
//!
//! All formats are UTF-8. Readers stream one block at a time, yield
//! diagnostics for rejected blocks instead of aborting, and keep running
//! totals of kept and dropped blocks; I/O failures abort with an `Err`.

mod bracket;
mod conll;
mod diagnostic;
mod escape;
mod morph;

pub use bracket::{
    parse_tree, read_treebank, serialize_tree, ConstituentNode, ParseOptions, ParsedTree,
    TreeOutcome, TreebankReader,
};
pub use conll::{
    from_conll, parse_conll_block, write_conll, ConllOutcome, ConllReader, ConllWriter,
};
pub use diagnostic::{codes, Diagnostic, Location, Severity};
pub use morph::{format_morph_line, parse_morph_line, MorphOutcome, MorphReader};
