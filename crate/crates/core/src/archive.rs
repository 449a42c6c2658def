//! Metadata for the 19 problems of the regression benchmark archive.

use serde::Serialize;

use crate::dataset::TimeSeriesDataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArchiveEntry {
    pub name: &'static str,
    pub train_size: usize,
    pub test_size: usize,
    /// Per-dimension series lengths (several entries when dimensions differ).
    pub lengths: &'static [usize],
    pub dimensions: usize,
    pub missing: bool,
}

macro_rules! entry {
    ($name:literal, $train:literal, $test:literal, [$($len:literal),+], $dims:literal, $missing:literal) => {
        ArchiveEntry {
            name: $name,
            train_size: $train,
            test_size: $test,
            lengths: &[$($len),+],
            dimensions: $dims,
            missing: $missing,
        }
    };
}

pub const ARCHIVE: [ArchiveEntry; 19] = [
    entry!("AppliancesEnergy", 96, 42, [144], 24, false),
    entry!("HouseholdPowerConsumption1", 746, 694, [1440], 5, true),
    entry!("HouseholdPowerConsumption2", 746, 694, [1440], 5, true),
    entry!("BenzeneConcentration", 3433, 5445, [240], 9, true),
    entry!("BeijingPM25Quality", 12432, 5100, [24], 9, true),
    entry!("BeijingPM10Quality", 12432, 5100, [24], 9, true),
    entry!("LiveFuelMoistureContent", 3493, 1510, [365], 7, false),
    entry!("FloodModeling1", 471, 202, [266], 1, false),
    entry!("FloodModeling2", 389, 167, [266], 1, false),
    entry!("FloodModeling3", 429, 184, [266], 1, false),
    entry!("AustraliaRainfall", 112186, 48081, [24], 3, false),
    entry!("PPGDalia", 43215, 21482, [256, 512], 4, false),
    entry!("IEEEPPG", 1768, 1328, [1000], 5, false),
    entry!("BIDMCRR", 5471, 2399, [4000], 2, false),
    entry!("BIDMCHR", 5550, 2399, [4000], 2, false),
    entry!("BIDMCSpO2", 5550, 2399, [4000], 2, false),
    entry!("NewsHeadlineSentiment", 58213, 24951, [144], 3, false),
    entry!("NewsTitleSentiment", 58213, 24951, [144], 3, false),
    entry!("Covid3Month", 140, 61, [84], 1, false),
];

pub fn lookup(name: &str) -> Option<&'static ArchiveEntry> {
    ARCHIVE.iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

impl ArchiveEntry {
    /// Lists every metadata field where the loaded train/test pair disagrees
    /// with this entry.
    pub fn mismatches(&self, train: &TimeSeriesDataset, test: &TimeSeriesDataset) -> Vec<String> {
        let mut out = Vec::new();
        if train.len() != self.train_size {
            out.push(format!("train size {} != {}", train.len(), self.train_size));
        }
        if test.len() != self.test_size {
            out.push(format!("test size {} != {}", test.len(), self.test_size));
        }
        for ds in [train, test] {
            if ds.n_dimensions() != Some(self.dimensions) {
                out.push(format!(
                    "{} dimensions {:?} != {}",
                    ds.split,
                    ds.n_dimensions(),
                    self.dimensions
                ));
            }
            if let Some(lens) = ds.dimension_lengths() {
                let mut distinct = lens.clone();
                distinct.sort_unstable();
                distinct.dedup();
                if distinct != self.lengths {
                    out.push(format!("{} lengths {distinct:?} != {:?}", ds.split, self.lengths));
                }
            }
        }
        let missing = train.has_missing() || test.has_missing();
        if missing != self.missing {
            out.push(format!("missing {missing} != {}", self.missing));
        }
        out
    }
}
