//! Every example runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(generate_and_parse);
example!(unit_interval_graphs);
example!(random_supergraph);
example!(bit_encoding_families);
example!(build_and_verify);
example!(failure_rate);
example!(construction_scaling);
