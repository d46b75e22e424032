package cadence

func (x *handler) run() {
	if x.ready {
		if r.config.EnableReplicationTaskGeneration {
			x.apply()
		}
		if EnableReplicationTaskGeneration {
			x.apply()
		}
	}
}
