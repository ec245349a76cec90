//! Survey tables embedded as text cells and decoded through the same row
//! parsers as user CSV files, so built-in and ingested values agree bit for bit.

use super::{
    AdcEntry, AntennaConfigEntry, ChannelEnvironment, Entries, PulseGeneratorEntry, Record, TableId,
};

// designer, year, sampling frequency, bits, power (W), source, reference
const ADC_STATE_OF_ART: [[&str; 7]; 17] = [
    [
        "W. Yang et al.",
        "2001",
        "75 MSPS",
        "14",
        "0.35",
        "state_of_art",
        "[8]",
    ],
    [
        "Y. Akazawa et al.",
        "1987",
        "400 MSPS",
        "8",
        "",
        "state_of_art",
        "[9]",
    ],
    [
        "I. Mehr and L. Singer",
        "1999",
        "500 MSPS",
        "6",
        "",
        "state_of_art",
        "[10]",
    ],
    [
        "HRL Labs",
        "1988",
        "1 GSPS",
        "4",
        "0.1",
        "state_of_art",
        "[7]",
    ],
    ["IERU", "1988", "1 GSPS", "4", "2.4", "state_of_art", "[7]"],
    [
        "Fraunhofer & TriQuint",
        "1992",
        "1 GSPS",
        "5",
        "3.4",
        "state_of_art",
        "[7]",
    ],
    [
        "Signal Processing Tech",
        "1995",
        "1 GSPS",
        "8",
        "5.5",
        "state_of_art",
        "[7]",
    ],
    [
        "Raytheon",
        "1989",
        "1.20 GSPS",
        "5",
        "3",
        "state_of_art",
        "[7]",
    ],
    ["TRW", "1996", "1.75 GSPS", "8", "", "state_of_art", "[7]"],
    [
        "Rockwell",
        "1995",
        "2 GSPS",
        "8",
        "5.3",
        "state_of_art",
        "[7]",
    ],
    [
        "T. Wakimoto et al.",
        "1988",
        "2 GSPS",
        "6",
        "",
        "state_of_art",
        "[11]",
    ],
    ["LEPA", "1986", "3 GSPS", "4", "0.15", "state_of_art", "[7]"],
    [
        "S. Park et al.",
        "2006",
        "4 GSPS",
        "4",
        "0.53",
        "state_of_art",
        "[12]",
    ],
    [
        "HP & Rockwell",
        "1994",
        "4 GSPS",
        "6",
        "5.7",
        "state_of_art",
        "[7]",
    ],
    ["HP", "1991", "4 GSPS", "8", "39", "state_of_art", "[7]"],
    [
        "HRL Labs",
        "1996",
        "8 GSPS",
        "3",
        "3.5",
        "state_of_art",
        "[7]",
    ],
    [
        "J. Lee et al.",
        "2003",
        "10 GSPS",
        "5",
        "",
        "state_of_art",
        "[13]",
    ],
];

// The market survey has neither year nor reference columns.
const ADC_MARKET: [[&str; 7]; 16] = [
    [
        "Texas Instrument",
        "",
        "210 MSPS",
        "12",
        "1.23",
        "market",
        "",
    ],
    ["Analog Device", "", "400 MSPS", "12", "6.8", "market", ""],
    [
        "Texas Instrument",
        "",
        "500 MSPS",
        "12",
        "2.25",
        "market",
        "",
    ],
    ["e2v", "", "500 MSPS", "12", "2.3", "market", ""],
    ["e2v", "", "500 MSPS", "8", "1.4", "market", ""],
    [
        "National Semiconductor",
        "",
        "500 MSPS",
        "8",
        "0.8",
        "market",
        "",
    ],
    ["Maxim", "", "600 MSPS", "8", "", "market", ""],
    ["Maxim", "", "1 GSPS", "8", "", "market", ""],
    [
        "National Semiconductor",
        "",
        "1 GSPS",
        "8",
        "1.2",
        "market",
        "",
    ],
    [
        "National Semiconductor",
        "",
        "1.5 GSPS",
        "8",
        "1.5",
        "market",
        "",
    ],
    ["Maxim", "", "1.5 GSPS", "8", "", "market", ""],
    ["e2v", "", "2 GSPS", "10", "4.6", "market", ""],
    ["e2v", "", "2.2 GSPS", "10", "4.2", "market", ""],
    ["Maxim", "", "2.2 GSPS", "8", "", "market", ""],
    [
        "National Semiconductor",
        "",
        "3 GSPS",
        "8",
        "1.6",
        "market",
        "",
    ],
    ["e2v", "", "5 GSPS", "8", "3.9", "market", ""],
];

// IEEE 802.15.4a, 2-10 GHz
const CHANNELS: [[&str; 3]; 9] = [
    ["Residential LOS", "LOS", "17 ns"],
    ["Residential NLOS", "NLOS", "19 ns"],
    ["Office LOS", "LOS", "10 ns"],
    ["Office NLOS", "NLOS", "13 ns"],
    ["Outdoor LOS", "LOS", "28 ns"],
    ["Outdoor NLOS", "NLOS", "78 ns"],
    ["Industrial LOS", "LOS", "9 ns"],
    ["Industrial NLOS", "NLOS", "89 ns"],
    ["Open Outdoor NLOS", "NLOS", "21 ns"],
];

// Reference numbers belong to this table only; [13] here is not the ADC [13].
const PULSE_GENERATORS: [[&str; 6]; 4] = [
    ["2007", "Deparis et al.", "pHEMT", "50 ps", "800 ps", "[13]"],
    [
        "2007",
        "Badalawa et al.",
        "CMOS 90 nm",
        "224 ps",
        "",
        "[14]",
    ],
    ["2006", "Kim et al.", "CMOS", "380 ps", "4000 ps", "[15]"],
    [
        "2006",
        "Bachelet et al.",
        "CMOS 130 nm",
        "92 ps",
        "",
        "[16]",
    ],
];

// Residential LOS, half-power beamwidths
const ANTENNA_CONFIGS: [[&str; 4]; 7] = [
    ["UWB_3_10GHz", "360", "360", "17 ns"],
    ["UWB_60GHz", "360", "360", "7.718 ns"],
    ["UWB_60GHz", "360", "60", "6.2 ns"],
    ["UWB_60GHz", "360", "15", "3.455 ns"],
    ["UWB_60GHz", "60", "60", "2.147 ns"],
    ["UWB_60GHz", "60", "15", "0.948 ns"],
    ["UWB_60GHz", "15", "15", "0.87 ns"],
];

fn decode<T: Record, const N: usize>(rows: &[[&str; N]], table: TableId) -> Vec<T> {
    rows.iter()
        .map(|cells| {
            T::from_csv_row(cells, table)
                .unwrap_or_else(|e| panic!("embedded {table} row {cells:?}: {e}"))
        })
        .collect()
}

pub fn adc_state_of_art() -> Vec<AdcEntry> {
    decode(&ADC_STATE_OF_ART, TableId::AdcStateOfArt)
}

pub fn adc_market() -> Vec<AdcEntry> {
    decode(&ADC_MARKET, TableId::AdcMarket)
}

pub fn channels() -> Vec<ChannelEnvironment> {
    decode(&CHANNELS, TableId::Channels)
}

pub fn pulse_generators() -> Vec<PulseGeneratorEntry> {
    decode(&PULSE_GENERATORS, TableId::PulseGenerators)
}

pub fn antenna_configs() -> Vec<AntennaConfigEntry> {
    decode(&ANTENNA_CONFIGS, TableId::AntennaConfigs)
}

/// Full embedded copy of a survey table.
pub fn load_builtin(table: TableId) -> Entries {
    match table {
        TableId::AdcStateOfArt => Entries::Adc(adc_state_of_art()),
        TableId::AdcMarket => Entries::Adc(adc_market()),
        TableId::Channels => Entries::Channels(channels()),
        TableId::PulseGenerators => Entries::PulseGenerators(pulse_generators()),
        TableId::AntennaConfigs => Entries::AntennaConfigs(antenna_configs()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::{AdcSource, Band, Sight};

    #[test]
    fn row_counts() {
        let counts: Vec<usize> = TableId::ALL
            .iter()
            .map(|&t| load_builtin(t).len())
            .collect();
        assert_eq!(counts, vec![17, 16, 9, 4, 7]);
    }

    #[test]
    fn spot_checks() {
        let ch = channels();
        assert!(ch.contains(&ChannelEnvironment {
            name: "Industrial LOS".into(),
            sight: Sight::Los,
            rms_delay_spread: 9e-9,
        }));

        let pg = pulse_generators();
        let bachelet = pg.iter().find(|p| p.author == "Bachelet et al.").unwrap();
        assert_eq!(
            (
                bachelet.year,
                bachelet.technology.as_str(),
                bachelet.min_pulse_duration
            ),
            (2006, "CMOS 130 nm", 92e-12)
        );
        assert_eq!(bachelet.max_pulse_duration, None);

        let last = adc_market().pop().unwrap();
        assert_eq!(last.designer, "e2v");
        assert_eq!(last.sampling_frequency, 5e9);
        assert_eq!(last.bit_precision, 8);
        assert_eq!(last.dissipated_power, Some(3.9));
        assert_eq!(last.source, AdcSource::Market);
        assert_eq!(last.year, None);

        let ant = antenna_configs();
        assert_eq!(ant[0].band, Band::Uwb3To10GHz);
        assert_eq!(ant[6].rms_delay_spread, 0.87e-9);
    }

    #[test]
    fn blank_cells_are_absent_not_zero() {
        let akazawa = &adc_state_of_art()[1];
        assert_eq!(akazawa.dissipated_power, None);
        let maxim = &adc_market()[6];
        assert_eq!(maxim.dissipated_power, None);
    }

    #[test]
    fn duplicate_1988_entries_are_both_kept() {
        let one_gsps_4bit: Vec<_> = adc_state_of_art()
            .into_iter()
            .filter(|a| a.year == Some(1988) && a.sampling_frequency == 1e9 && a.bit_precision == 4)
            .collect();
        assert_eq!(one_gsps_4bit.len(), 2);
        assert_ne!(
            one_gsps_4bit[0].dissipated_power,
            one_gsps_4bit[1].dissipated_power
        );
    }

    #[test]
    fn delay_spreads_are_unique_per_table() {
        let ch = channels();
        for c in &ch {
            assert_eq!(
                ch.iter()
                    .filter(|o| o.rms_delay_spread == c.rms_delay_spread)
                    .count(),
                1
            );
        }
        let ant = antenna_configs();
        for a in &ant {
            assert_eq!(
                ant.iter()
                    .filter(|o| o.rms_delay_spread == a.rms_delay_spread)
                    .count(),
                1
            );
        }
    }

    #[test]
    fn loading_is_stable() {
        for t in TableId::ALL {
            assert_eq!(load_builtin(t), load_builtin(t));
        }
    }
}
