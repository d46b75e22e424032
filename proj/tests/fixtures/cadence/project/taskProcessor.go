package cadence

func (x *handler) run() {
	if x.ready {
		if t.config.EnablePriorityTaskProcessor {
			x.apply()
		}
		if t.config.EnableDebugMode {
			x.apply()
		}
	}
}
