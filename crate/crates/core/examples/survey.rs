//! Counting realizable η over a family of small groups in one stem.

use pialg::realizability::{survey_stem, SurveyOptions};
use pialg::tables::{parse_group, StableTables};

fn main() {
    let tables = StableTables::defaults();
    let opts = SurveyOptions {
        max_cyclic_order: 4,
        max_summands: 1,
        include_free: true,
        targets: ["Z/2", "Z/3", "Z/4", "Z/12"].iter().map(|t| parse_group(t).unwrap()).collect(),
        ..SurveyOptions::default()
    };
    let report = survey_stem(3, &tables, &opts).unwrap();
    print!("{report}");
}
