# Genome rearrangement core
