"""Service layer: graphicality, characterization, oracle and sigma."""
