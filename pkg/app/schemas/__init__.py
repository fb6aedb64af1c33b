# Pydantic models for sequences, graphs and verdicts.
