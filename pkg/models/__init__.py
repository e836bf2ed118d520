# Initialize models package
