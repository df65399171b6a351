//! Engineering fitness problems: antenna-array sidelobe minimization and
//! frequency-modulated tone matching.

pub mod antenna;
pub mod fm;
