//! The guide in `book/`, compiled so that every snippet runs as a doc-test.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub mod $name {}
    };
}

chapter!(introduction, "introduction.md");
chapter!(systems, "systems.md");
chapter!(invariants, "invariants.md");
chapter!(classes, "classes.md");
chapter!(constructions, "constructions.md");
chapter!(products, "products.md");
chapter!(oracles, "oracles.md");
chapter!(cli, "cli.md");
