// The guide chapters under book/src/ double as doc-tests: each chapter is
// included as module documentation here so `cargo test --doc` compiles and
// runs every Rust snippet in the book.

#[doc = include_str!("../../../book/src/introduction.md")]
mod _guide_introduction {}

#[doc = include_str!("../../../book/src/hermitian-toolbox.md")]
mod _guide_hermitian_toolbox {}

#[doc = include_str!("../../../book/src/channels.md")]
mod _guide_channels {}

#[doc = include_str!("../../../book/src/entropies.md")]
mod _guide_entropies {}

#[doc = include_str!("../../../book/src/recovery-map.md")]
mod _guide_recovery_map {}

#[doc = include_str!("../../../book/src/proof-audits.md")]
mod _guide_proof_audits {}

#[doc = include_str!("../../../book/src/harness.md")]
mod _guide_harness {}
