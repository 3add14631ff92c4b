use std::fmt;

/// Step labels of the prime-power algorithm, plus the record written when
/// per-factor results are combined by the Chinese remainder theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum StepLabel {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    XII,
    XIII,
    XIV,
    CRT,
}

impl StepLabel {
    pub const ALGORITHM_STEPS: [StepLabel; 14] = [
        StepLabel::I,
        StepLabel::II,
        StepLabel::III,
        StepLabel::IV,
        StepLabel::V,
        StepLabel::VI,
        StepLabel::VII,
        StepLabel::VIII,
        StepLabel::IX,
        StepLabel::X,
        StepLabel::XI,
        StepLabel::XII,
        StepLabel::XIII,
        StepLabel::XIV,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            StepLabel::I => "I",
            StepLabel::II => "II",
            StepLabel::III => "III",
            StepLabel::IV => "IV",
            StepLabel::V => "V",
            StepLabel::VI => "VI",
            StepLabel::VII => "VII",
            StepLabel::VIII => "VIII",
            StepLabel::IX => "IX",
            StepLabel::X => "X",
            StepLabel::XI => "XI",
            StepLabel::XII => "XII",
            StepLabel::XIII => "XIII",
            StepLabel::XIV => "XIV",
            StepLabel::CRT => "CRT",
        }
    }
}

impl fmt::Display for StepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One executed step: its label and the variables bound there, in binding
/// order. Symbols ending in `_signed` carry the compact signed
/// representative of the preceding binding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub label: StepLabel,
    bindings: Vec<(&'static str, i128)>,
}

impl TraceStep {
    pub fn bindings(&self) -> &[(&'static str, i128)] {
        &self.bindings
    }

    pub fn get(&self, symbol: &str) -> Option<i128> {
        self.bindings
            .iter()
            .find(|(name, _)| *name == symbol)
            .map(|&(_, value)| value)
    }
}

/// Ordered record of the steps an invocation ran through; one prime-power
/// run per step-I entry, then a CRT record for the combination.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TraceLog {
    steps: Vec<TraceStep>,
}

impl TraceLog {
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn visited(&self, label: StepLabel) -> bool {
        self.steps.iter().any(|s| s.label == label)
    }

    /// First step with the given label, if any.
    pub fn step(&self, label: StepLabel) -> Option<&TraceStep> {
        self.steps.iter().find(|s| s.label == label)
    }

    pub(crate) fn push(&mut self, label: StepLabel, bindings: Vec<(&'static str, i128)>) {
        self.steps.push(TraceStep { label, bindings });
    }

    pub(crate) fn append(&mut self, mut other: TraceLog) {
        self.steps.append(&mut other.steps);
    }
}
