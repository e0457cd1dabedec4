"""fliess_prelie package: exact computer algebra for Fliess composition, its Hopf and prelie structures, and partitioned trees."""
