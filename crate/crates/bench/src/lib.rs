//! Benchmark inputs. See `benches/engine.rs`.

use forca_core::gb::{EngineConfig, PresentationRef, RingPresentation};
use forca_core::{MonomialOrder, PrimeField, Rationals};

pub fn rationals(vars: &[&str], relations: &[&str]) -> PresentationRef<Rationals> {
    RingPresentation::parse(Rationals, vars, relations, MonomialOrder::DegRevLex, EngineConfig::default())
        .expect("benchmark ring parses")
}

pub fn prime(p: u64, vars: &[&str], relations: &[&str]) -> PresentationRef<PrimeField> {
    RingPresentation::parse(PrimeField::new(p).unwrap(), vars, relations, MonomialOrder::DegRevLex, EngineConfig::default())
        .expect("benchmark ring parses")
}
