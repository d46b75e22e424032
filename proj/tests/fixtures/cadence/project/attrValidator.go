package cadence

func (x *handler) run() {
	if x.ready {
		if types.ArchivalStatusEnabled {
			x.apply()
		}
		if d.clusterMetadata.GetEnabledClusterInfo() {
			x.apply()
		}
	}
}
