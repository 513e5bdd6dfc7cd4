use std::borrow::Cow;
use std::fmt;

use thiserror::Error;

use super::tag::FineTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error("empty morpheme form")]
    EmptyForm,
    #[error("eojeol must contain at least one morpheme")]
    EmptyEojeol,
}

/// One root-form or affix with its fine-grained POS tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morpheme {
    form: String,
    tag: FineTag,
}

impl Morpheme {
    pub fn new(form: impl Into<String>, tag: FineTag) -> Result<Self, MorphError> {
        let form = form.into();
        if form.is_empty() {
            return Err(MorphError::EmptyForm);
        }
        Ok(Morpheme { form, tag })
    }

    pub fn form(&self) -> &str {
        &self.form
    }

    pub fn tag(&self) -> &FineTag {
        &self.tag
    }
}

impl fmt::Display for Morpheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.form, self.tag)
    }
}

/// A whitespace-delimited surface token with its ordered morpheme analysis.
///
/// The default surface form is the concatenation of the morpheme forms.
/// Korean morphology can fuse adjacent forms (들이켰다 analyses as
/// 들이키+였+다), so an explicit surface is stored whenever it differs from
/// the concatenation; a stored surface equal to the concatenation is
/// normalized away so that structural equality captures surface equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Eojeol {
    morphemes: Vec<Morpheme>,
    surface: Option<String>,
}

impl Eojeol {
    pub fn new(morphemes: Vec<Morpheme>) -> Result<Self, MorphError> {
        if morphemes.is_empty() {
            return Err(MorphError::EmptyEojeol);
        }
        Ok(Eojeol {
            morphemes,
            surface: None,
        })
    }

    pub fn with_surface(
        morphemes: Vec<Morpheme>,
        surface: impl Into<String>,
    ) -> Result<Self, MorphError> {
        let mut eojeol = Self::new(morphemes)?;
        eojeol.set_surface(Some(surface.into()));
        Ok(eojeol)
    }

    pub fn morphemes(&self) -> &[Morpheme] {
        &self.morphemes
    }

    /// Effective surface form: the stored one if present, otherwise the
    /// concatenation of all morpheme forms.
    pub fn surface(&self) -> Cow<'_, str> {
        match &self.surface {
            Some(s) => Cow::Borrowed(s),
            None => Cow::Owned(self.concatenated_forms()),
        }
    }

    /// The explicitly stored surface, if it differs from the concatenation.
    pub fn explicit_surface(&self) -> Option<&str> {
        self.surface.as_deref()
    }

    pub fn concatenated_forms(&self) -> String {
        self.morphemes.iter().map(Morpheme::form).collect()
    }

    /// Store (or clear) an explicit surface, normalizing away a surface that
    /// matches the concatenation.
    pub fn set_surface(&mut self, surface: Option<String>) {
        self.surface = surface.filter(|s| *s != self.concatenated_forms());
    }

    /// Append morphemes at the end, preserving any explicit surface by
    /// extending it with the new forms.
    pub fn append_morphemes(&mut self, extra: impl IntoIterator<Item = Morpheme>) {
        let explicit = self.surface.take();
        let before_len = self.morphemes.len();
        self.morphemes.extend(extra);
        if let Some(mut s) = explicit {
            for m in &self.morphemes[before_len..] {
                s.push_str(m.form());
            }
            self.set_surface(Some(s));
        }
    }
}

impl fmt::Display for Eojeol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.morphemes.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Tagset;

    fn m(form: &str, tag: &str) -> Morpheme {
        Morpheme::new(form, FineTag::new(Tagset::Kaist, tag).unwrap()).unwrap()
    }

    #[test]
    fn surface_defaults_to_concatenation() {
        let e = Eojeol::new(vec![m("나", "npp"), m("는", "jxt")]).unwrap();
        assert_eq!(e.surface(), "나는");
        assert_eq!(e.explicit_surface(), None);
    }

    #[test]
    fn fused_surface_is_kept_verbatim() {
        let e = Eojeol::with_surface(
            vec![m("들이키", "pvg"), m("였", "ep"), m("다", "ef")],
            "들이켰다",
        )
        .unwrap();
        assert_eq!(e.surface(), "들이켰다");
        assert_eq!(e.concatenated_forms(), "들이키였다");
        assert_eq!(e.explicit_surface(), Some("들이켰다"));
    }

    #[test]
    fn redundant_surface_is_normalized_away() {
        let a = Eojeol::with_surface(vec![m("나", "npp"), m("는", "jxt")], "나는").unwrap();
        let b = Eojeol::new(vec![m("나", "npp"), m("는", "jxt")]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn appending_extends_explicit_surface() {
        let mut e =
            Eojeol::with_surface(vec![m("들이키", "pvg"), m("였", "ep")], "들이켰").unwrap();
        e.append_morphemes([m("다", "ef")]);
        assert_eq!(e.surface(), "들이켰다");
        let mut plain = Eojeol::new(vec![m("나", "npp")]).unwrap();
        plain.append_morphemes([m("는", "jxt")]);
        assert_eq!(plain.surface(), "나는");
        assert_eq!(plain.explicit_surface(), None);
    }
}
