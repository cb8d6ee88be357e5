"""Core labeling, closed-form, oracle and certification modules."""
