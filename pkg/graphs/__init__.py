# Graph model, generators and invariants
