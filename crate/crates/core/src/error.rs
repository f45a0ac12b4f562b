use thiserror::Error;

/// Errors surfaced by the exact-computation pipelines.
///
/// Scale violations and meataxe budget exhaustion are explicit variants so
/// that batch runs can record "skipped" or "inconclusive" rather than
/// silently misreporting.
#[derive(Error, Debug)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),
    #[error("no {k}-th root of unity in field of order {order}")]
    NoSuchRoot { k: u64, order: u64 },
    #[error("coefficient characteristic must differ from matrix characteristic (both are {0})")]
    EqualCharacteristic(u64),
    #[error("scale: {what} = {size} exceeds bound {bound}")]
    Scale { what: String, size: u64, bound: u64 },
    #[error("field of order {0} exceeds the supported size 2^20")]
    FieldTooLarge(u64),
    #[error("meataxe inconclusive after {attempts} random algebra elements")]
    Inconclusive { attempts: u32 },
    #[error("labeling ambiguity at partition {partition}: {candidates} unlabeled candidate classes")]
    LabelingAmbiguity { partition: String, candidates: usize },
    #[error("coefficient field has no primitive {p}-th root of unity; degree {needed} extension required")]
    MissingRootOfUnity { p: u64, needed: u32 },
    #[error("endomorphism field enlargement by degree {0} exceeds bound {1}")]
    EnlargementBound(u32, u32),
    #[error("element is not the minimal-length representative of its finite-Weyl coset")]
    NonMinimal,
    #[error("inadmissible translation exponents {0:?} at truncation level {1}")]
    Inadmissible(Vec<i64>, u32),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
