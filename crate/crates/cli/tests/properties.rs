use proptest::prelude::*;

use coring_core::coring::comatrix_from_module;
use coring_core::fixtures::{random_bimodule, Gf3};
use coring_lab::builtin::to_json;
use coring_lab::commands::{Command, Options};
use coring_lab::export::Exporter;
use coring_lab::load::{parse_file, resolve};
use coring_lab::run_fixture;
use coring_lab::schema::{CoringDef, FixtureFile, Targets};

fn random_fixture(seed: u64) -> FixtureFile {
    let sigma = random_bimodule::<Gf3>(seed);
    let mut ex = Exporter::<Gf3>::new("RAND", "random bimodule");
    ex.bimodule("Sigma", &sigma);
    ex.coring("C", CoringDef::Comatrix { bimodule: "Sigma".into() });
    ex.targets(Targets { sigma: Some("Sigma".into()), extension: None, coring: Some("C".into()), comodule: None });
    ex.finish()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn fixtures_round_trip(seed in 0u64..10_000) {
        let file = random_fixture(seed);
        let text = to_json(&file);
        let parsed = parse_file(&text).unwrap();
        prop_assert_eq!(&parsed, &file);
        prop_assert_eq!(to_json(&parsed), text);
        let fx = resolve::<Gf3>(&parsed).unwrap();
        let sigma = random_bimodule::<Gf3>(seed);
        prop_assert_eq!(&fx.bimodules["Sigma"], &sigma);
        prop_assert_eq!(&fx.corings["C"], &comatrix_from_module(&sigma).unwrap().coring);
    }

    #[test]
    fn reports_depend_only_on_the_seed(seed in 0u64..10_000, run_seed in 0u64..100) {
        let file = random_fixture(seed);
        let opts = Options { seed: run_seed, ..Options::default() };
        for cmd in [Command::Comatrix, Command::Cosemisimple] {
            let a = run_fixture(cmd, &file, &opts).unwrap();
            let b = run_fixture(cmd, &file, &opts).unwrap();
            prop_assert_eq!(a.to_json(), b.to_json());
            prop_assert_eq!(a.to_text(), b.to_text());
        }
    }
}
