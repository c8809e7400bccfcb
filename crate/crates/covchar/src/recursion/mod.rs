pub struct EnsembleSpec;
pub enum Variant { Complex, Real }
