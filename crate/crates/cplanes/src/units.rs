//! Unit handling. All internal arithmetic is in Hartree atomic units
//! (hbar = m_e = e = 4 pi eps0 = 1); SI appears only as a conversion layer at
//! the CLI boundary. CODATA 2018 values.

/// Hartree energy in electronvolts.
pub const HARTREE_EV: f64 = 27.211_386_245_988;
/// Hartree energy in joules.
pub const HARTREE_J: f64 = 4.359_744_722_207_1e-18;
/// Bohr radius in meters.
pub const BOHR_M: f64 = 5.291_772_109_03e-11;
/// Atomic unit of time in seconds.
pub const ATOMIC_TIME_S: f64 = 2.418_884_326_585_7e-17;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    Atomic,
    Si,
}

impl UnitSystem {
    pub fn label(self) -> &'static str {
        match self {
            UnitSystem::Atomic => "au",
            UnitSystem::Si => "si",
        }
    }

    /// Multiply an internal (atomic-unit) length to express it in this system.
    pub fn length_out(self, bohr: f64) -> f64 {
        match self {
            UnitSystem::Atomic => bohr,
            UnitSystem::Si => bohr * BOHR_M,
        }
    }

    /// Parse a length given in this system into atomic units.
    pub fn length_in(self, value: f64) -> f64 {
        match self {
            UnitSystem::Atomic => value,
            UnitSystem::Si => value / BOHR_M,
        }
    }

    pub fn time_out(self, au: f64) -> f64 {
        match self {
            UnitSystem::Atomic => au,
            UnitSystem::Si => au * ATOMIC_TIME_S,
        }
    }

    pub fn time_in(self, value: f64) -> f64 {
        match self {
            UnitSystem::Atomic => value,
            UnitSystem::Si => value / ATOMIC_TIME_S,
        }
    }

    pub fn energy_out(self, hartree: f64) -> f64 {
        match self {
            UnitSystem::Atomic => hartree,
            UnitSystem::Si => hartree * HARTREE_J,
        }
    }

    pub fn energy_in(self, value: f64) -> f64 {
        match self {
            UnitSystem::Atomic => value,
            UnitSystem::Si => value / HARTREE_J,
        }
    }
}
