//! Backslash escaping for the text formats.
//!
//! The bracketed tree format reserves `( ) + / = \` and whitespace inside
//! morpheme forms, tags and surfaces; CoNLL-X columns and morph-file
//! analyses reserve `+ / \` and whitespace. Escaping is uniform: a
//! backslash makes the next character literal.

/// Characters that must be escaped inside bracketed-tree text.
pub(crate) const BRACKET_SPECIALS: &[char] = &['(', ')', '+', '/', '=', '\\'];

/// Characters that must be escaped inside plus-joined CoNLL/morph fields.
pub(crate) const FIELD_SPECIALS: &[char] = &['+', '/', '\\'];

pub(crate) fn escape_into(out: &mut String, text: &str, specials: &[char]) {
    for c in text.chars() {
        if specials.contains(&c) || c.is_whitespace() {
            out.push('\\');
        }
        out.push(c);
    }
}

pub(crate) fn escape(text: &str, specials: &[char]) -> String {
    let mut out = String::with_capacity(text.len());
    escape_into(&mut out, text, specials);
    out
}

/// Undo [`escape`]. Returns `None` on a trailing bare backslash.
#[cfg(test)]
pub(crate) fn unescape(text: &str) -> Option<String> {
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            out.push(chars.next()?);
        } else {
            out.push(c);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn escapes_specials_and_whitespace() {
        assert_eq!(escape("(", BRACKET_SPECIALS), "\\(");
        assert_eq!(escape("a+b", FIELD_SPECIALS), "a\\+b");
        assert_eq!(escape("a b", FIELD_SPECIALS), "a\\ b");
        assert_eq!(escape("plain", BRACKET_SPECIALS), "plain");
    }

    #[test]
    fn unescape_rejects_trailing_backslash() {
        assert_eq!(unescape("a\\"), None);
        assert_eq!(unescape("a\\\\"), Some("a\\".to_string()));
    }

    proptest! {
        #[test]
        fn round_trips_arbitrary_text(text in ".*") {
            let bracket = unescape(&escape(&text, BRACKET_SPECIALS));
            prop_assert_eq!(bracket.as_deref(), Some(text.as_str()));
            let field = unescape(&escape(&text, FIELD_SPECIALS));
            prop_assert_eq!(field.as_deref(), Some(text.as_str()));
        }
    }
}
