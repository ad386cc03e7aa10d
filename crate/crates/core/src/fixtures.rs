//! Fixtures shipped with the library.

use crate::presentation::{parse_presentation, Document, PresentationError, ResolveError};
use crate::psfun::PsFun;
use crate::wclass::WClass;

pub const BUILTIN: &[(&str, &str)] = &[
    ("appx-toy.json", include_str!("../../../fixtures/appx-toy.json")),
    ("appx-toy-idem.json", include_str!("../../../fixtures/appx-toy-idem.json")),
    ("iso2.json", include_str!("../../../fixtures/iso2.json")),
    ("arrow2.json", include_str!("../../../fixtures/arrow2.json")),
    ("pt.json", include_str!("../../../fixtures/pt.json")),
    ("discrete2.json", include_str!("../../../fixtures/discrete2.json")),
    ("toy-flat.json", include_str!("../../../fixtures/toy-flat.json")),
];

/// Parses a built-in fixture by file name, with or without the `.json` suffix.
pub fn builtin(name: &str) -> Result<Document, PresentationError> {
    let key = name.rsplit('/').next().unwrap_or(name);
    let text = BUILTIN
        .iter()
        .find(|(n, _)| *n == key || n.strip_suffix(".json") == Some(key))
        .map(|(_, t)| *t)
        .ok_or_else(|| PresentationError { path: name.to_string(), message: "no such built-in fixture".into() })?;
    parse_presentation(text)
}

/// Resolves pseudofunctor targets among the built-in fixtures.
pub fn builtin_loader(_: &Document, target: &str) -> Result<Document, PresentationError> {
    builtin(target)
}

/// A configuration `(F, W_A, W_B)` over the built-in fixtures. `class_tgt`
/// is looked up in the target document of `psfun`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteEntry {
    pub file: &'static str,
    pub psfun: &'static str,
    pub class_src: &'static str,
    pub class_tgt: &'static str,
}

const fn entry(file: &'static str, psfun: &'static str, class_src: &'static str, class_tgt: &'static str) -> SuiteEntry {
    SuiteEntry { file, psfun, class_src, class_tgt }
}

/// Configurations satisfying the standing hypotheses of the A conditions.
pub const SUITE: &[SuiteEntry] = &[
    entry("appx-toy", "id", "W", "W"),
    entry("appx-toy", "squash", "Wmin", "Wmin"),
    entry("appx-toy", "id", "Wmin", "W"),
    entry("appx-toy", "id", "Wmin", "@min"),
    entry("appx-toy", "killgamma", "W", "W"),
    entry("appx-toy", "collapse", "W", "W"),
    entry("appx-toy-idem", "id", "W", "W"),
    entry("appx-toy-idem", "squash", "Wmin", "Wmin"),
    entry("iso2", "id", "W", "W"),
    entry("iso2", "collapse", "W", "W"),
    entry("pt", "incl", "W", "W"),
    entry("arrow2", "id", "W", "W"),
];

impl std::fmt::Display for SuiteEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{} ({}, {})", self.file, self.psfun, self.class_src, self.class_tgt)
    }
}

/// A suite entry with its pseudofunctor and classes built.
#[derive(Debug, Clone)]
pub struct SuiteCase {
    pub entry: SuiteEntry,
    pub psfun: PsFun,
    pub w_a: WClass,
    pub w_b: WClass,
}

impl SuiteEntry {
    pub fn load(&self) -> Result<SuiteCase, ResolveError> {
        let doc = builtin(self.file)?;
        let r = doc.resolve_psfun(self.psfun, &builtin_loader)?;
        let missing = |name: &str| PresentationError { path: "classes".into(), message: format!("unknown class `{name}`") };
        let w_a = doc.class(self.class_src).ok_or_else(|| missing(self.class_src))?;
        let target = r.target_doc.as_ref().ok_or_else(|| missing(self.class_tgt))?;
        let w_b = target.class(self.class_tgt).ok_or_else(|| missing(self.class_tgt))?;
        Ok(SuiteCase { entry: *self, psfun: r.psfun, w_a, w_b })
    }
}
