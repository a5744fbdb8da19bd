pub mod error;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod projcoh;
pub mod frobmod;
pub mod trunc;
pub mod flagpic;
pub mod covers;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/subrings.md")]
    mod subrings {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/frobenius.md")]
    mod frobenius {}
    #[doc = include_str!("../../../book/src/covers.md")]
    mod covers {}
    #[doc = include_str!("../../../book/src/truncation.md")]
    mod truncation {}
    #[doc = include_str!("../../../book/src/flags.md")]
    mod flags {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
